//! Points, lines and curvilinear zero-dimensional schemes in ℙ^m, with their
//! Veronese spans.
//!
//! A connected curvilinear component of length `k` is stored as the order
//! `k−1` jet of a smooth germ `γ(t) = p + t v₁ + ⋯ + t^{k−1} v_{k−1}`. The span
//! of its Veronese image is spanned by the `t⁰ … t^{k−1}` coefficient vectors
//! of `ν_d(γ(t))`: a degree-`d` form vanishes on the component iff `F(γ(t))`
//! vanishes to order `k`.
//!
//! Germs are kept in a normal form that depends only on the scheme: the germ
//! is moved to the affine chart of the first nonzero coordinate of `p` and
//! reparametrized so that the first coordinate moving to first order is
//! `p_j + t` exactly. Two components are equal iff their normal forms are.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::poly::{self, BinaryForm};
use crate::rat::{self, Rat};

/// Evaluation of all degree-`d` monomials at `coords`, graded-lex order.
pub fn veronese_raw(coords: &[Rat], d: u32) -> Vec<Rat> {
    // powers[j][e] = coords[j]^e
    let powers: Vec<Vec<Rat>> = coords
        .iter()
        .map(|c| {
            let mut ps = vec![Rat::one()];
            for e in 1..=d as usize {
                let next = &ps[e - 1] * c;
                ps.push(next);
            }
            ps
        })
        .collect();
    poly::monomials(coords.len(), d)
        .iter()
        .map(|alpha| {
            alpha
                .iter()
                .enumerate()
                .fold(Rat::one(), |acc, (j, &e)| acc * &powers[j][e as usize])
        })
        .collect()
}

/// Veronese image of a point.
pub fn veronese(p: &ProjPoint, d: u32) -> Vec<Rat> {
    veronese_raw(p.coords(), d)
}

/// Point of ℙ^m normalized so that its first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<Rat>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        let coords = rat::normalize_first_one(&coords).ok_or(Error::ZeroPoint)?;
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        ProjPoint::new(coords.iter().map(|&c| rat::rat(c)).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// `m`, the dimension of the ambient projective space.
    pub fn m(&self) -> usize {
        self.coords.len() - 1
    }

    fn pivot(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("nonzero point")
    }
}

/// Line of ℙ^m, stored as the reduced echelon basis of its 2-dimensional
/// linear span.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    basis: [Vec<Rat>; 2],
}

impl Line {
    pub fn new(u: &[Rat], v: &[Rat]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: u.len(),
                found: v.len(),
            });
        }
        let rows = linalg::span_basis(&[u.to_vec(), v.to_vec()], u.len())?;
        if rows.len() != 2 {
            return Err(Error::DegenerateLine);
        }
        let mut it = rows.into_iter();
        Ok(Line {
            basis: [it.next().unwrap(), it.next().unwrap()],
        })
    }

    /// Line through two distinct points.
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self> {
        Line::new(p.coords(), q.coords())
    }

    pub fn basis(&self) -> &[Vec<Rat>; 2] {
        &self.basis
    }

    pub fn m(&self) -> usize {
        self.basis[0].len() - 1
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        v.len() == self.basis[0].len()
            && linalg::in_span(&self.basis, v).expect("lengths checked")
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.contains_vec(p.coords())
    }

    /// Basis of the linear forms vanishing on the line (empty when m = 1).
    pub fn defining_forms(&self) -> Vec<Vec<Rat>> {
        Mat::from_rows(self.basis[0].len(), &self.basis)
            .expect("basis rows share a length")
            .kernel()
    }

    /// Degree-1 parametrization `(s:t) ↦ s·b₀ + t·b₁`.
    pub fn parametrization(&self) -> Vec<BinaryForm> {
        self.basis[0]
            .iter()
            .zip(&self.basis[1])
            .map(|(a, b)| BinaryForm::new(vec![a.clone(), b.clone()]))
            .collect()
    }

    /// Coordinates `(s, t)` of a point of the line, if it lies on it.
    pub fn parameter_of(&self, p: &ProjPoint) -> Option<(Rat, Rat)> {
        let c = linalg::coordinates_in(&self.basis, p.coords()).ok()??;
        Some((c[0].clone(), c[1].clone()))
    }
}

mod series {
    //! Truncated power series in `t` with rational coefficients; every series
    //! here has exactly `k` coefficients.

    use alloc::vec;
    use alloc::vec::Vec;
    use num_traits::{One, Zero};

    use crate::rat::Rat;

    pub fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let k = a.len();
        let mut out = vec![Rat::zero(); k];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(k - i) {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(a: &[Rat]) -> Vec<Rat> {
        let k = a.len();
        let mut out = vec![Rat::zero(); k];
        out[0] = Rat::one() / &a[0];
        for n in 1..k {
            let mut acc = Rat::zero();
            for i in 1..=n {
                acc += &a[i] * &out[n - i];
            }
            out[n] = -acc * &out[0];
        }
        out
    }

    /// `f(τ(t))` for `τ(0) = 0`.
    pub fn compose(f: &[Rat], tau: &[Rat]) -> Vec<Rat> {
        let k = f.len();
        let mut out = vec![Rat::zero(); k];
        let mut power = vec![Rat::zero(); k];
        power[0] = Rat::one();
        for (i, c) in f.iter().enumerate() {
            if i > 0 {
                power = mul(&power, tau);
            }
            if !c.is_zero() {
                for (o, p) in out.iter_mut().zip(&power) {
                    *o += c * p;
                }
            }
        }
        out
    }

    /// Compositional inverse of `σ` with `σ(0) = 0`, `σ'(0) ≠ 0`.
    pub fn reversion(sigma: &[Rat]) -> Vec<Rat> {
        let k = sigma.len();
        let mut tau = vec![Rat::zero(); k];
        if k < 2 {
            return tau;
        }
        tau[1] = Rat::one() / &sigma[1];
        for n in 2..k {
            let c = compose(sigma, &tau)[n].clone();
            tau[n] = -c * &tau[1];
        }
        tau
    }
}

/// Connected curvilinear component: the order-`(k−1)` jet of a smooth germ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurvComponent {
    support: ProjPoint,
    jets: Vec<Vec<Rat>>,
}

impl CurvComponent {
    /// Reduced point.
    pub fn point(p: ProjPoint) -> Self {
        CurvComponent {
            support: p,
            jets: Vec::new(),
        }
    }

    /// Jet of `γ(t) = point + Σ tⁱ jets[i−1]`; length `jets.len() + 1`.
    pub fn new(point: Vec<Rat>, jets: Vec<Vec<Rat>>) -> Result<Self> {
        let n = point.len();
        if n == 0 {
            return Err(Error::ZeroPoint);
        }
        for v in &jets {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        if rat::is_zero_vec(&point) {
            return Err(Error::ZeroPoint);
        }
        let k = jets.len() + 1;
        let mut coeffs = vec![point];
        coeffs.extend(jets);
        // gamma[j] = series of coordinate j
        let gamma: Vec<Vec<Rat>> = (0..n)
            .map(|j| coeffs.iter().map(|v| v[j].clone()).collect())
            .collect();
        let pivot = gamma.iter().position(|s| !s[0].is_zero()).unwrap();
        let inv = series::inverse(&gamma[pivot]);
        let mut gamma: Vec<Vec<Rat>> = gamma.iter().map(|s| series::mul(s, &inv)).collect();
        if k >= 2 {
            let j = gamma
                .iter()
                .position(|s| !s[1].is_zero())
                .ok_or(Error::SingularGerm)?;
            let mut sigma = gamma[j].clone();
            sigma[0] = Rat::zero();
            let tau = series::reversion(&sigma);
            gamma = gamma.iter().map(|s| series::compose(s, &tau)).collect();
        }
        let support = ProjPoint {
            coords: gamma.iter().map(|s| s[0].clone()).collect(),
        };
        debug_assert_eq!(support.coords[support.pivot()], Rat::one());
        let jets = (1..k)
            .map(|i| gamma.iter().map(|s| s[i].clone()).collect())
            .collect();
        Ok(CurvComponent { support, jets })
    }

    pub fn from_ints(point: &[i64], jets: &[&[i64]]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&c| rat::rat(c)).collect::<Vec<_>>();
        CurvComponent::new(conv(point), jets.iter().map(|v| conv(v)).collect())
    }

    pub fn support(&self) -> &ProjPoint {
        &self.support
    }

    /// Normal-form jet vectors `v₁ … v_{k−1}`.
    pub fn jets(&self) -> &[Vec<Rat>] {
        &self.jets
    }

    pub fn length(&self) -> usize {
        self.jets.len() + 1
    }

    pub fn is_reduced(&self) -> bool {
        self.jets.is_empty()
    }

    /// The unique subscheme of length `len` (`1 ≤ len ≤ length`).
    pub fn truncate(&self, len: usize) -> Self {
        assert!(len >= 1 && len <= self.length(), "truncation length out of range");
        CurvComponent {
            support: self.support.clone(),
            jets: self.jets[..len - 1].to_vec(),
        }
    }

    /// True iff `other` is a subscheme of `self`.
    pub fn contains_component(&self, other: &CurvComponent) -> bool {
        other.support == self.support
            && other.length() <= self.length()
            && self.jets[..other.jets.len()] == other.jets[..]
    }

    fn coord_series(&self) -> Vec<Vec<Rat>> {
        let n = self.support.coords.len();
        (0..n)
            .map(|j| {
                core::iter::once(self.support.coords[j].clone())
                    .chain(self.jets.iter().map(|v| v[j].clone()))
                    .collect()
            })
            .collect()
    }

    /// Coefficient vectors of `t⁰ … t^{k−1}` in `ν_d(γ(t))`, no checks.
    pub(crate) fn jet_vectors(&self, d: u32) -> Vec<Vec<Rat>> {
        let k = self.length();
        if k == 1 {
            return vec![veronese(&self.support, d)];
        }
        let gamma = self.coord_series();
        let powers: Vec<Vec<Vec<Rat>>> = gamma
            .iter()
            .map(|s| {
                let mut one = vec![Rat::zero(); k];
                one[0] = Rat::one();
                let mut ps = vec![one];
                for e in 1..=d as usize {
                    let next = series::mul(&ps[e - 1], s);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mons = poly::monomials(gamma.len(), d);
        let mut out = vec![vec![Rat::zero(); mons.len()]; k];
        for (col, alpha) in mons.iter().enumerate() {
            let mut acc = powers[0][alpha[0] as usize].clone();
            for (j, &e) in alpha.iter().enumerate().skip(1) {
                if e > 0 {
                    acc = series::mul(&acc, &powers[j][e as usize]);
                }
            }
            for (i, c) in acc.into_iter().enumerate() {
                out[i][col] = c;
            }
        }
        out
    }

    /// Order of vanishing of `h(γ(t))` for a linear form `h`, capped at `k`.
    fn vanishing_order(&self, h: &[Rat]) -> usize {
        core::iter::once(self.support.coords())
            .chain(self.jets.iter().map(|v| v.as_slice()))
            .position(|v| !rat::dot(h, v).is_zero())
            .unwrap_or(self.length())
    }

    /// Length of the intersection with a line.
    pub fn line_intersection_degree(&self, line: &Line) -> usize {
        line.defining_forms()
            .iter()
            .map(|h| self.vanishing_order(h))
            .min()
            .unwrap_or(self.length())
    }
}

/// Spanning vectors of `⟨ν_d(c)⟩` for a component of length at most `d+1`;
/// independence is checked.
pub fn jet_span(c: &CurvComponent, d: u32) -> Result<Vec<Vec<Rat>>> {
    let k = c.length();
    if k > d as usize + 1 {
        return Err(Error::ComponentTooLong {
            length: k,
            bound: d as usize + 1,
        });
    }
    let vs = c.jet_vectors(d);
    let rank = linalg::span_rank(&vs, vs[0].len())?;
    if rank != k {
        return Err(Error::DependentJet { length: k, rank });
    }
    Ok(vs)
}

/// Disjoint union of curvilinear components with pairwise distinct supports,
/// sorted by support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scheme {
    m: usize,
    components: Vec<CurvComponent>,
}

impl Scheme {
    pub fn new(m: usize, mut components: Vec<CurvComponent>) -> Result<Self> {
        for c in &components {
            if c.support.m() != m {
                return Err(Error::DimensionMismatch {
                    expected: m + 1,
                    found: c.support.m() + 1,
                });
            }
        }
        components.sort_by(|a, b| a.support.cmp(&b.support));
        if components.windows(2).any(|w| w[0].support == w[1].support) {
            return Err(Error::DuplicateSupport);
        }
        Ok(Scheme { m, components })
    }

    pub fn empty(m: usize) -> Self {
        Scheme {
            m,
            components: Vec::new(),
        }
    }

    pub fn reduced(m: usize, points: Vec<ProjPoint>) -> Result<Self> {
        Scheme::new(m, points.into_iter().map(CurvComponent::point).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn components(&self) -> &[CurvComponent] {
        &self.components
    }

    pub fn degree(&self) -> usize {
        self.components.iter().map(CurvComponent::length).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(CurvComponent::is_reduced)
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Supports of all components.
    pub fn supports(&self) -> Vec<ProjPoint> {
        self.components.iter().map(|c| c.support.clone()).collect()
    }

    pub fn component_at(&self, p: &ProjPoint) -> Option<&CurvComponent> {
        self.components.iter().find(|c| &c.support == p)
    }

    /// Subscheme containment.
    pub fn contains(&self, other: &Scheme) -> bool {
        other.components.iter().all(|c| {
            self.component_at(&c.support)
                .is_some_and(|mine| mine.contains_component(c))
        })
    }

    fn check_ambient(&self, other: &Scheme) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.m + 1,
                found: other.m + 1,
            });
        }
        Ok(())
    }

    /// Scheme-theoretic union. At a shared support one component must contain
    /// the other; otherwise the union is not curvilinear.
    pub fn union(&self, other: &Scheme) -> Result<Scheme> {
        self.check_ambient(other)?;
        let mut out = self.components.clone();
        for c in &other.components {
            match out.iter().position(|x| x.support == c.support) {
                None => out.push(c.clone()),
                Some(i) => {
                    if c.contains_component(&out[i]) {
                        out[i] = c.clone();
                    } else if !out[i].contains_component(c) {
                        return Err(Error::UnrepresentableUnion);
                    }
                }
            }
        }
        Scheme::new(self.m, out)
    }

    /// Scheme-theoretic intersection: the longest common truncation at each
    /// shared support.
    pub fn intersection(&self, other: &Scheme) -> Result<Scheme> {
        self.check_ambient(other)?;
        let mut out = Vec::new();
        for a in &self.components {
            if let Some(b) = other.component_at(&a.support) {
                let common = a
                    .jets
                    .iter()
                    .zip(&b.jets)
                    .take_while(|(x, y)| x == y)
                    .count();
                out.push(a.truncate(common + 1));
            }
        }
        Scheme::new(self.m, out)
    }

    /// Components not meeting `other`'s supports.
    pub fn without_supports_of(&self, other: &Scheme) -> Scheme {
        Scheme {
            m: self.m,
            components: self
                .components
                .iter()
                .filter(|c| other.component_at(&c.support).is_none())
                .cloned()
                .collect(),
        }
    }

    /// Spanning vectors of `⟨ν_d(W)⟩`, no length checks.
    pub(crate) fn span_vectors(&self, d: u32) -> Vec<Vec<Rat>> {
        self.components.iter().flat_map(|c| c.jet_vectors(d)).collect()
    }

    /// `deg W − dim⟨ν_d(W)⟩`, valid for any curvilinear scheme.
    pub(crate) fn defect(&self, d: u32) -> usize {
        let vs = self.span_vectors(d);
        if vs.is_empty() {
            return 0;
        }
        let dim = linalg::span_rank(&vs, vs[0].len()).expect("uniform lengths");
        self.degree() - dim
    }

    pub fn intersect_with_line(&self, line: &Line) -> Scheme {
        Scheme {
            m: self.m,
            components: self
                .components
                .iter()
                .filter_map(|c| {
                    let e = c.line_intersection_degree(line);
                    (e > 0).then(|| c.truncate(e))
                })
                .collect(),
        }
    }

    /// Reduced points of the scheme (errors if any component is not a point).
    pub fn points(&self) -> Result<Vec<ProjPoint>> {
        if !self.is_reduced() {
            return Err(Error::NonReduced);
        }
        Ok(self.supports())
    }

    /// Every maximal proper subscheme: one component shortened by one.
    pub fn maximal_proper_subschemes(&self) -> Vec<Scheme> {
        (0..self.components.len())
            .map(|i| {
                let mut comps = self.components.clone();
                let len = comps[i].length();
                if len == 1 {
                    comps.remove(i);
                } else {
                    comps[i] = comps[i].truncate(len - 1);
                }
                Scheme {
                    m: self.m,
                    components: comps,
                }
            })
            .collect()
    }
}

fn check_lengths(w: &Scheme, d: u32) -> Result<()> {
    for c in &w.components {
        if c.length() > d as usize + 1 {
            return Err(Error::ComponentTooLong {
                length: c.length(),
                bound: d as usize + 1,
            });
        }
    }
    Ok(())
}

/// Concatenated jet spans of all components.
pub fn scheme_span(w: &Scheme, d: u32) -> Result<Vec<Vec<Rat>>> {
    let mut out = Vec::new();
    for c in &w.components {
        out.extend(jet_span(c, d)?);
    }
    Ok(out)
}

/// Span defect `deg W − dim⟨ν_x(W)⟩`.
pub fn h1(w: &Scheme, x: u32) -> Result<usize> {
    check_lengths(w, x)?;
    Ok(w.defect(x))
}

pub fn line_intersection_degree(w: &Scheme, line: &Line) -> usize {
    w.components
        .iter()
        .map(|c| c.line_intersection_degree(line))
        .sum()
}

/// Largest number of points of a reduced scheme on one line.
pub fn max_collinear(s: &Scheme) -> Result<usize> {
    let pts = s.points()?;
    if pts.len() <= 2 {
        return Ok(pts.len());
    }
    let mut best = 2;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let line = Line::through(&pts[i], &pts[j])?;
            let n = pts.iter().filter(|p| line.contains(p)).count();
            best = best.max(n);
        }
    }
    Ok(best)
}

pub fn in_scheme_span(p: &[Rat], w: &Scheme, d: u32) -> Result<bool> {
    let vs = w.span_vectors(d);
    if vs.is_empty() {
        return Ok(rat::is_zero_vec(p));
    }
    if vs[0].len() != p.len() {
        return Err(Error::DimensionMismatch {
            expected: vs[0].len(),
            found: p.len(),
        });
    }
    linalg::in_span(&vs, p)
}

/// True iff `P ∈ ⟨ν_d(W)⟩` but `P` lies in the span of no proper subscheme.
pub fn minimal_for(p: &[Rat], w: &Scheme, d: u32) -> Result<bool> {
    if poly::monomial_count(w.m + 1, d) != p.len() {
        return Err(Error::DimensionMismatch {
            expected: poly::monomial_count(w.m + 1, d),
            found: p.len(),
        });
    }
    if rat::is_zero_vec(p) {
        return Err(Error::ZeroPoint);
    }
    if !in_scheme_span(p, w, d)? {
        return Err(Error::NotInSpan);
    }
    for sub in w.maximal_proper_subschemes() {
        if in_scheme_span(p, &sub, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};
    use proptest::prelude::*;

    fn pt(c: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(c).unwrap()
    }

    fn conic_point(s: i64, t: i64) -> ProjPoint {
        pt(&[s * s, s * t, t * t])
    }

    #[test]
    fn veronese_examples() {
        assert_eq!(veronese(&pt(&[1, 1]), 2), vec![rat(1), rat(1), rat(1)]);
        assert_eq!(veronese(&pt(&[1, 0]), 2), vec![rat(1), rat(0), rat(0)]);
        let v: Vec<Rat> = [1, 2, 3, 4, 6, 9].iter().map(|&x| rat(x)).collect();
        assert_eq!(veronese(&pt(&[1, 2, 3]), 2), v);
    }

    #[test]
    fn points_normalize() {
        assert_eq!(pt(&[0, 2, 4]), pt(&[0, 1, 2]));
        assert_eq!(pt(&[-3, 6]).coords(), &[rat(1), rat(-2)]);
        assert_eq!(ProjPoint::from_ints(&[0, 0]), Err(Error::ZeroPoint));
    }

    #[test]
    fn jet_span_examples() {
        let c = CurvComponent::point(pt(&[1, 2]));
        assert_eq!(jet_span(&c, 3).unwrap(), vec![veronese(&pt(&[1, 2]), 3)]);

        let c = CurvComponent::from_ints(&[1, 0], &[&[0, 1]]).unwrap();
        let span = jet_span(&c, 2).unwrap();
        let expected = vec![vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]];
        assert_eq!(
            linalg::span_basis(&span, 3).unwrap(),
            linalg::span_basis(&expected, 3).unwrap()
        );

        // ν₄(1, t, t²) to order t²
        let c = CurvComponent::from_ints(&[1, 0, 0], &[&[0, 1, 0], &[0, 0, 1]]).unwrap();
        let span = jet_span(&c, 4).unwrap();
        assert_eq!(linalg::span_rank(&span, 15).unwrap(), 3);
        let too_long = CurvComponent::from_ints(&[1, 0], &[&[0, 1], &[0, 0], &[0, 0]]).unwrap();
        assert!(matches!(jet_span(&too_long, 2), Err(Error::ComponentTooLong { .. })));
    }

    #[test]
    fn normal_form_is_reparametrization_invariant() {
        // γ(t) = (1, t, t²) versus γ(2t + t²) scaled by (3 + t)
        let a = CurvComponent::from_ints(&[1, 0, 0], &[&[0, 1, 0], &[0, 0, 1]]).unwrap();
        // γ(2t+t²) = (1, 2t + t², 4t² + …)
        let g: [[i64; 3]; 3] = [[1, 0, 0], [0, 2, 0], [0, 1, 4]];
        // multiply by (3 + t)
        let mut scaled = vec![vec![rat(0); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                scaled[i][j] += rat(3 * g[i][j]);
                if i + 1 < 3 {
                    scaled[i + 1][j] += rat(g[i][j]);
                }
            }
        }
        let b = CurvComponent::new(scaled[0].clone(), scaled[1..].to_vec()).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            CurvComponent::from_ints(&[1, 0], &[&[2, 0]]),
            Err(Error::SingularGerm)
        ));
    }

    #[test]
    fn scheme_span_examples() {
        let two = Scheme::reduced(1, vec![pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        assert_eq!(linalg::span_rank(&scheme_span(&two, 1).unwrap(), 2).unwrap(), 2);
        let d = 4;
        let coll = Scheme::reduced(2, (0..(d as i64 + 2)).map(|i| pt(&[1, i, 0])).collect()).unwrap();
        let n = poly::monomial_count(3, d);
        assert_eq!(linalg::span_rank(&scheme_span(&coll, d).unwrap(), n).unwrap(), d as usize + 1);
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1(&Scheme::reduced(2, vec![pt(&[1, 2, 3])]).unwrap(), 3).unwrap(), 0);
        let six = Scheme::reduced(2, (0..6).map(|i| pt(&[1, i, 0])).collect()).unwrap();
        assert_eq!(h1(&six, 4).unwrap(), 1);
        let ten = Scheme::reduced(2, (1..=10).map(|i| conic_point(1, i)).collect()).unwrap();
        assert_eq!(h1(&ten, 4).unwrap(), 1);
    }

    #[test]
    fn line_intersection_examples() {
        let line = Line::through(&pt(&[1, 0, 0]), &pt(&[0, 1, 0])).unwrap();
        let on = Scheme::reduced(2, vec![pt(&[1, 3, 0])]).unwrap();
        let off = Scheme::reduced(2, vec![pt(&[1, 3, 1])]).unwrap();
        assert_eq!(line_intersection_degree(&on, &line), 1);
        assert_eq!(line_intersection_degree(&off, &line), 0);
        let inside = CurvComponent::from_ints(&[1, 0, 0], &[&[0, 1, 0], &[1, 5, 0]]).unwrap();
        assert_eq!(inside.line_intersection_degree(&line), 3);
        let transverse = CurvComponent::from_ints(&[1, 0, 0], &[&[0, 1, 1]]).unwrap();
        assert_eq!(transverse.line_intersection_degree(&line), 1);
        // tangent to order 2 only: (1, t, t²)
        let conic = CurvComponent::from_ints(&[1, 0, 0], &[&[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(conic.line_intersection_degree(&line), 2);
        let w = Scheme::new(2, vec![conic.clone()]).unwrap();
        assert_eq!(w.intersect_with_line(&line).components()[0], conic.truncate(2));
    }

    #[test]
    fn collinearity_examples() {
        let s = Scheme::reduced(
            2,
            vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 0]), pt(&[0, 0, 1])],
        )
        .unwrap();
        assert_eq!(max_collinear(&s).unwrap(), 3);
        let general = Scheme::reduced(
            2,
            vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1]), pt(&[1, 1, 1])],
        )
        .unwrap();
        assert_eq!(max_collinear(&general).unwrap(), 2);
        let conic = Scheme::reduced(2, (0..5).map(|i| conic_point(1, i)).collect()).unwrap();
        assert_eq!(max_collinear(&conic).unwrap(), 2);
        let jet = Scheme::new(2, vec![CurvComponent::from_ints(&[1, 0, 0], &[&[0, 1, 0]]).unwrap()])
            .unwrap();
        assert_eq!(max_collinear(&jet), Err(Error::NonReduced));
    }

    #[test]
    fn minimality_examples() {
        let d = 4;
        let p = pt(&[1, 2, 3]);
        let q = pt(&[1, -1, 2]);
        let vp = veronese(&p, d);
        assert!(minimal_for(&vp, &Scheme::reduced(2, vec![p.clone()]).unwrap(), d).unwrap());
        assert!(!minimal_for(&vp, &Scheme::reduced(2, vec![p.clone(), q.clone()]).unwrap(), d).unwrap());

        let pts: Vec<ProjPoint> = (0..5).map(|i| conic_point(1, i)).collect();
        let mut combo = vec![rat(0); 15];
        for (i, x) in pts.iter().enumerate() {
            rat::axpy(&ratio(2 * i as i64 + 1, 3), &veronese(x, d), &mut combo);
        }
        let w = Scheme::reduced(2, pts.clone()).unwrap();
        assert!(minimal_for(&combo, &w, d).unwrap());
        // oracle: all 2⁵ − 2 proper nonempty subsets miss the point
        for mask in 1u32..31 {
            let sub: Vec<ProjPoint> =
                (0..5).filter(|i| mask >> i & 1 == 1).map(|i| pts[i].clone()).collect();
            let vs: Vec<Vec<Rat>> = sub.iter().map(|x| veronese(x, d)).collect();
            assert!(!linalg::in_span(&vs, &combo).unwrap());
        }
        assert_eq!(
            minimal_for(&veronese(&q, d), &Scheme::reduced(2, vec![p]).unwrap(), d),
            Err(Error::NotInSpan)
        );
    }

    #[test]
    fn union_and_intersection() {
        let a = CurvComponent::from_ints(&[1, 0, 0], &[&[0, 1, 0], &[0, 0, 1]]).unwrap();
        let b = a.truncate(2);
        let c = CurvComponent::from_ints(&[1, 0, 0], &[&[0, 0, 1]]).unwrap();
        let q = CurvComponent::point(pt(&[0, 1, 0]));
        let sa = Scheme::new(2, vec![a.clone(), q.clone()]).unwrap();
        let sb = Scheme::new(2, vec![b.clone()]).unwrap();
        let sc = Scheme::new(2, vec![c]).unwrap();
        assert_eq!(sa.union(&sb).unwrap(), sa);
        assert_eq!(sa.intersection(&sb).unwrap(), sb);
        assert_eq!(sb.union(&sc), Err(Error::UnrepresentableUnion));
        assert_eq!(sb.intersection(&sc).unwrap().degree(), 1);
        assert_eq!(
            Scheme::new(2, vec![q.clone(), q]),
            Err(Error::DuplicateSupport)
        );
    }

    fn small_point(m: usize) -> impl Strategy<Value = Vec<Rat>> {
        proptest::collection::vec(-4i64..5, m + 1)
            .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
            .prop_map(|v| v.into_iter().map(rat).collect())
    }

    fn small_component(m: usize, max_len: usize) -> impl Strategy<Value = CurvComponent> {
        (small_point(m), proptest::collection::vec(small_point(m), 0..max_len)).prop_filter_map(
            "singular germ",
            |(p, jets)| CurvComponent::new(p, jets).ok(),
        )
    }

    fn small_scheme(m: usize, max_len: usize, max_comps: usize) -> impl Strategy<Value = Scheme> {
        proptest::collection::vec(small_component(m, max_len), 1..=max_comps).prop_map(move |cs| {
            let mut seen: Vec<CurvComponent> = Vec::new();
            for c in cs {
                if seen.iter().all(|x| x.support() != c.support()) {
                    seen.push(c);
                }
            }
            Scheme::new(m, seen).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn small_curvilinear_schemes_are_independent(
            (x, w) in (2u32..6).prop_flat_map(|x| (Just(x), small_scheme(2, 3, 3)))
        ) {
            prop_assume!(w.degree() <= x as usize + 1);
            prop_assert_eq!(h1(&w, x).unwrap(), 0);
        }

        #[test]
        fn veronese_is_injective(a in small_point(2), b in small_point(2), d in 1u32..4) {
            let (pa, pb) = (ProjPoint::new(a).unwrap(), ProjPoint::new(b).unwrap());
            let va = veronese(&pa, d);
            let vb = veronese(&pb, d);
            let proportional = linalg::span_rank(&[va, vb], poly::monomial_count(3, d)).unwrap() == 1;
            prop_assert_eq!(proportional, pa == pb);
        }

        #[test]
        fn line_degree_bounded_by_scheme_degree(
            w in small_scheme(2, 4, 3), u in small_point(2), v in small_point(2)
        ) {
            let line = match Line::new(&u, &v) { Ok(l) => l, Err(_) => return Ok(()) };
            let deg = line_intersection_degree(&w, &line);
            prop_assert!(deg <= w.degree());
            let inside = w.components().iter().all(|c| {
                core::iter::once(c.support().coords()).chain(c.jets().iter().map(|j| j.as_slice()))
                    .all(|v| line.contains_vec(v))
            });
            prop_assert_eq!(deg == w.degree(), inside);
        }

        #[test]
        fn span_is_monotone(w in small_scheme(2, 3, 3), d in 2u32..5) {
            let n = poly::monomial_count(3, d);
            let full = linalg::span_rank(&w.span_vectors(d), n).unwrap();
            for sub in w.maximal_proper_subschemes() {
                prop_assert!(sub.contains(&sub));
                prop_assert!(w.contains(&sub));
                let vs = sub.span_vectors(d);
                let r = if vs.is_empty() { 0 } else { linalg::span_rank(&vs, n).unwrap() };
                prop_assert!(r <= full);
            }
        }

        #[test]
        fn normal_form_invariant_under_rescaling(
            c in small_component(2, 4), lambda in 1i64..5, mu in -3i64..4
        ) {
            // γ(t) ↦ (λ + μt)·γ(t)
            let mut coeffs = vec![c.support().coords().to_vec()];
            coeffs.extend(c.jets().iter().cloned());
            let k = coeffs.len();
            let mut scaled = vec![vec![rat(0); 3]; k];
            for i in 0..k {
                for j in 0..3 {
                    scaled[i][j] += rat(lambda) * &coeffs[i][j];
                    if i + 1 < k {
                        scaled[i + 1][j] += rat(mu) * &coeffs[i][j];
                    }
                }
            }
            let d = CurvComponent::new(scaled[0].clone(), scaled[1..].to_vec()).unwrap();
            prop_assert_eq!(c, d);
        }
    }
}
