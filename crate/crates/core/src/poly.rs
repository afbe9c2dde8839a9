//! Dense homogeneous polynomials, apolarity and binary forms.
//!
//! Monomials of a fixed degree are ordered graded-lexicographically with
//! x₀ > x₁ > … > x_m, i.e. `x₀^d, x₀^{d-1}x₁, …, x_m^d`. The same order indexes
//! Veronese coordinates, catalecticant rows and columns and the JSON format.
//!
//! Apolarity uses plain partial derivatives: `g(∂)F` replaces each `xᵢ` in
//! `g` by `∂/∂xᵢ`. No divided-power normalization is applied.
//!
//! A point `P` of ℙ^N (a symmetric tensor) is identified with the form
//! `Σ_α (d choose α) P_α x^α`, so that the Veronese image of `p` maps to
//! `(p₀x₀ + ⋯ + p_m x_m)^d`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rat::{self, int, Rat};

/// Exponent vectors of all monomials of degree `d` in `nvars` variables, in
/// graded-lex order.
pub fn monomials(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if nvars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for e0 in (0..=d).rev() {
        for rest in monomials(nvars - 1, d - e0) {
            let mut v = Vec::with_capacity(nvars);
            v.push(e0);
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn monomial_count(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    rat::binomial_usize(d as usize + nvars - 1, nvars - 1)
}

/// Position of `alpha` in [`monomials`]`(alpha.len(), |alpha|)`.
pub fn monomial_index(alpha: &[u32]) -> usize {
    let n = alpha.len();
    let mut remaining: u32 = alpha.iter().sum();
    let mut idx = 0;
    for (i, &a) in alpha.iter().enumerate().take(n.saturating_sub(1)) {
        for e in a + 1..=remaining {
            idx += monomial_count(n - i - 1, remaining - e);
        }
        remaining -= a;
    }
    idx
}

fn factorial_ratio(top: u32, bottom: u32) -> Rat {
    // top! / bottom! for bottom <= top
    let mut acc = num_bigint::BigInt::one();
    for k in bottom + 1..=top {
        acc *= k;
    }
    int(&acc)
}

/// Homogeneous polynomial of degree `d` in `m+1` variables with dense
/// graded-lex coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogPoly {
    nvars: usize,
    degree: u32,
    coeffs: Vec<Rat>,
}

impl HomogPoly {
    /// `m` is the number of variables minus one.
    pub fn new(m: usize, degree: u32, coeffs: Vec<Rat>) -> Result<Self> {
        let n = monomial_count(m + 1, degree);
        if coeffs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: coeffs.len(),
            });
        }
        Ok(HomogPoly {
            nvars: m + 1,
            degree,
            coeffs,
        })
    }

    pub fn zero(m: usize, degree: u32) -> Self {
        HomogPoly {
            nvars: m + 1,
            degree,
            coeffs: vec![Rat::zero(); monomial_count(m + 1, degree)],
        }
    }

    /// Sums the given terms; exponents must have length `m+1` and sum to `d`.
    pub fn from_terms<I>(m: usize, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = HomogPoly::zero(m, degree);
        for (exp, c) in terms {
            if exp.len() != m + 1 {
                return Err(Error::DimensionMismatch {
                    expected: m + 1,
                    found: exp.len(),
                });
            }
            let s: u32 = exp.iter().sum();
            if s != degree {
                return Err(Error::Invalid(alloc::format!(
                    "exponents sum to {s}, expected {degree}"
                )));
            }
            p.coeffs[monomial_index(&exp)] += c;
        }
        Ok(p)
    }

    /// The form attached to a point of ℙ^N (coordinates in the Veronese basis).
    pub fn from_point(m: usize, degree: u32, point: &[Rat]) -> Result<Self> {
        let mons = monomials(m + 1, degree);
        if point.len() != mons.len() {
            return Err(Error::DimensionMismatch {
                expected: mons.len(),
                found: point.len(),
            });
        }
        let coeffs = mons
            .iter()
            .zip(point)
            .map(|(a, p)| p * int(&rat::multinomial(a)))
            .collect();
        HomogPoly::new(m, degree, coeffs)
    }

    /// Inverse of [`HomogPoly::from_point`].
    pub fn to_point(&self) -> Vec<Rat> {
        monomials(self.nvars, self.degree)
            .iter()
            .zip(&self.coeffs)
            .map(|(a, c)| c / int(&rat::multinomial(a)))
            .collect()
    }

    /// `(l₀x₀ + ⋯ + l_m x_m)^d`.
    pub fn linear_power(l: &[Rat], degree: u32) -> Result<Self> {
        if l.is_empty() {
            return Err(Error::Invalid("linear form needs at least one variable".into()));
        }
        let point = crate::scheme::veronese_raw(l, degree);
        HomogPoly::from_point(l.len() - 1, degree, &point)
    }

    pub fn m(&self) -> usize {
        self.nvars - 1
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: &[u32]) -> &Rat {
        &self.coeffs[monomial_index(alpha)]
    }

    pub fn is_zero(&self) -> bool {
        rat::is_zero_vec(&self.coeffs)
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms(&self) -> Vec<(Vec<u32>, Rat)> {
        monomials(self.nvars, self.degree)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(a, c)| (a, c.clone()))
            .collect()
    }

    fn check_same_space(&self, other: &HomogPoly) -> Result<()> {
        if self.nvars != other.nvars || self.degree != other.degree {
            return Err(Error::Invalid("polynomials live in different spaces".into()));
        }
        Ok(())
    }

    /// αF + βG.
    pub fn lin_comb(alpha: &Rat, f: &HomogPoly, beta: &Rat, g: &HomogPoly) -> Result<Self> {
        f.check_same_space(g)?;
        let coeffs = f
            .coeffs
            .iter()
            .zip(&g.coeffs)
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        Ok(HomogPoly {
            coeffs,
            ..f.clone()
        })
    }

    pub fn mul(&self, other: &HomogPoly) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let mut out = HomogPoly::zero(self.m(), self.degree + other.degree);
        let lhs = self.terms();
        for (b, cb) in other.terms() {
            for (a, ca) in &lhs {
                let e: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                out.coeffs[monomial_index(&e)] += ca * &cb;
            }
        }
        Ok(out)
    }

    /// `g(∂)F` for a form `g` of degree at most `deg F`.
    pub fn apply_operator(&self, g: &HomogPoly) -> Result<Self> {
        if g.nvars != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: g.nvars,
            });
        }
        if g.degree > self.degree {
            return Err(Error::Invalid("operator degree exceeds form degree".into()));
        }
        let mut out = HomogPoly::zero(self.m(), self.degree - g.degree);
        let fterms = self.terms();
        for (alpha, ga) in g.terms() {
            for (gamma, fc) in &fterms {
                if gamma.iter().zip(&alpha).any(|(x, y)| x < y) {
                    continue;
                }
                let beta: Vec<u32> = gamma.iter().zip(&alpha).map(|(x, y)| x - y).collect();
                let mut c = &ga * fc;
                for (&x, &y) in gamma.iter().zip(&beta) {
                    c *= factorial_ratio(x, y);
                }
                out.coeffs[monomial_index(&beta)] += c;
            }
        }
        Ok(out)
    }

    /// Matrix of `g ↦ g(∂)F` from degree-`a` forms to degree-`(d−a)` forms.
    /// Rows are indexed by degree-`(d−a)` monomials, columns by degree-`a`
    /// monomials.
    pub fn catalecticant(&self, a: u32) -> Result<Mat> {
        if a == 0 || a >= self.degree {
            return Err(Error::LevelOutOfRange {
                level: a as usize,
                max: self.degree.saturating_sub(1) as usize,
            });
        }
        Ok(self.catalecticant_any(a))
    }

    /// Like [`HomogPoly::catalecticant`] but accepting every `0 ≤ a ≤ d`.
    pub(crate) fn catalecticant_any(&self, a: u32) -> Mat {
        let rows = monomials(self.nvars, self.degree - a);
        let cols = monomials(self.nvars, a);
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (i, beta) in rows.iter().enumerate() {
            for (j, alpha) in cols.iter().enumerate() {
                let gamma: Vec<u32> = alpha.iter().zip(beta).map(|(x, y)| x + y).collect();
                let c = self.coeff(&gamma);
                if c.is_zero() {
                    continue;
                }
                let mut v = c.clone();
                for (&g, &b) in gamma.iter().zip(beta) {
                    v *= factorial_ratio(g, b);
                }
                out.set(i, j, v);
            }
        }
        out
    }

    /// Largest catalecticant rank; a lower bound for the symmetric border
    /// rank.
    pub fn cat_lower_bound(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let best = (1..=self.degree / 2)
            .map(|a| self.catalecticant_any(a).rank())
            .max()
            .unwrap_or(1);
        Ok(best.max(1))
    }

    /// `F(q₀, …, q_m)` for binary forms `qᵢ` of a common degree `e`; the result
    /// has degree `d·e`.
    pub fn pull_back(&self, params: &[BinaryForm]) -> Result<BinaryForm> {
        let mat = curve_matrix(self.nvars, self.degree, params)?;
        let coeffs = mat.transpose().mul_vec(&self.coeffs)?;
        Ok(BinaryForm::new(coeffs))
    }

    /// Pullback of a ternary form along a conic parametrization by three
    /// linearly independent binary quadrics.
    pub fn restrict_to_conic(&self, param: &[BinaryForm; 3]) -> Result<BinaryForm> {
        if self.nvars != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: self.nvars,
            });
        }
        check_conic(param)?;
        self.pull_back(param)
    }
}

fn check_conic(param: &[BinaryForm; 3]) -> Result<()> {
    if param.iter().any(|q| q.degree() != 2) {
        return Err(Error::DegenerateParametrization("conic needs binary quadrics".into()));
    }
    let rows: Vec<Vec<Rat>> = param.iter().map(|q| q.coeffs().to_vec()).collect();
    if Mat::from_rows(3, &rows)?.rank() != 3 {
        return Err(Error::DegenerateParametrization(
            "quadrics are linearly dependent".into(),
        ));
    }
    Ok(())
}

/// Standard conic parametrization `(s², st, t²)`.
pub fn standard_conic() -> [BinaryForm; 3] {
    [
        BinaryForm::new(vec![Rat::one(), Rat::zero(), Rat::zero()]),
        BinaryForm::new(vec![Rat::zero(), Rat::one(), Rat::zero()]),
        BinaryForm::new(vec![Rat::zero(), Rat::zero(), Rat::one()]),
    ]
}

/// Matrix with rows indexed by degree-`d` monomials `α` in `params.len()`
/// variables and columns by binary monomials of degree `d·e`; entry `(α, j)` is
/// the coefficient of `s^{de-j} t^j` in `Π qᵢ^{αᵢ}`.
///
/// Its transpose is the pullback on forms; the matrix itself maps the
/// Veronese image of `(s:t)` in degree `de` to the Veronese image of
/// `(q₀(s,t): ⋯ : q_m(s,t))` in degree `d`.
pub fn curve_matrix(nvars: usize, d: u32, params: &[BinaryForm]) -> Result<Mat> {
    if params.len() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: params.len(),
        });
    }
    let e = params[0].degree();
    if params.iter().any(|q| q.degree() != e) {
        return Err(Error::DegenerateParametrization("mixed parameter degrees".into()));
    }
    let powers: Vec<Vec<BinaryForm>> = params
        .iter()
        .map(|q| {
            let mut ps = vec![BinaryForm::constant(Rat::one())];
            for k in 1..=d as usize {
                let next = ps[k - 1].mul(q);
                ps.push(next);
            }
            ps
        })
        .collect();
    let mons = monomials(nvars, d);
    let width = (d * e) as usize + 1;
    let mut out = Mat::zeros(mons.len(), width);
    for (i, alpha) in mons.iter().enumerate() {
        let mut prod = BinaryForm::constant(Rat::one());
        for (v, &a) in alpha.iter().enumerate() {
            prod = prod.mul(&powers[v][a as usize]);
        }
        for (j, c) in prod.coeffs().iter().enumerate() {
            out.set(i, j, c.clone());
        }
    }
    Ok(out)
}

/// Binary form of degree `d·e` corresponding to a point of the span of the
/// degree-`d` Veronese image of the curve parametrized by `params`.
///
/// This is the tensor-level identification (Veronese image of a curve point
/// goes to a `de`-th power of a binary linear form), so binary rank and border
/// rank computed on the result are ranks with respect to the curve.
pub fn curve_point_to_binary(point: &[Rat], d: u32, params: &[BinaryForm]) -> Result<BinaryForm> {
    let mat = curve_matrix(params.len(), d, params)?;
    if mat.rank() != mat.cols() {
        return Err(Error::DegenerateParametrization(
            "Veronese image of the curve spans less than expected".into(),
        ));
    }
    let b = mat.solve(point)?.ok_or(Error::NotOnCurveSpan)?;
    let n = mat.cols() - 1;
    Ok(BinaryForm::new(
        b.iter()
            .enumerate()
            .map(|(j, x)| x * int(&rat::binomial(n, j)))
            .collect(),
    ))
}

/// Inverse of [`curve_point_to_binary`].
pub fn binary_to_curve_point(g: &BinaryForm, d: u32, params: &[BinaryForm]) -> Result<Vec<Rat>> {
    let mat = curve_matrix(params.len(), d, params)?;
    if g.degree() as usize + 1 != mat.cols() {
        return Err(Error::DimensionMismatch {
            expected: mat.cols() - 1,
            found: g.degree() as usize,
        });
    }
    let n = g.degree() as usize;
    let b: Vec<Rat> = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| c / int(&rat::binomial(n, j)))
        .collect();
    mat.mul_vec(&b)
}

/// Binary form `Σ cᵢ x^{d−i} yⁱ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    /// Panics on an empty coefficient vector.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form has at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| rat::rat(c)).collect())
    }

    pub fn constant(c: Rat) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// `(a x + b y)^d`.
    pub fn linear_power(a: &Rat, b: &Rat, d: u32) -> Self {
        let d = d as usize;
        BinaryForm::new(
            (0..=d)
                .map(|i| {
                    int(&rat::binomial(d, i)) * rat::pow(a, (d - i) as u32) * rat::pow(b, i as u32)
                })
                .collect(),
        )
    }

    /// Product of the linear forms `bᵢ x − aᵢ y`, vanishing at the points
    /// `(aᵢ : bᵢ)`.
    pub fn vanishing_at(points: &[(Rat, Rat)]) -> Self {
        points.iter().fold(BinaryForm::constant(Rat::one()), |acc, (a, b)| {
            acc.mul(&BinaryForm::new(vec![b.clone(), -a.clone()]))
        })
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        rat::is_zero_vec(&self.coeffs)
    }

    pub fn from_homog(p: &HomogPoly) -> Result<Self> {
        if p.nvars() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: p.nvars(),
            });
        }
        Ok(BinaryForm::new(p.coeffs().to_vec()))
    }

    pub fn to_homog(&self) -> HomogPoly {
        HomogPoly::new(1, self.degree(), self.coeffs.clone()).expect("binary layout")
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BinaryForm::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &BinaryForm) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree() as usize,
                found: other.degree() as usize,
            });
        }
        Ok(BinaryForm::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn mul(&self, other: &BinaryForm) -> Self {
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm::new(out)
    }

    /// `g(p(x, y), q(x, y))` for linear forms `p`, `q`.
    pub fn substitute(&self, p: &BinaryForm, q: &BinaryForm) -> Result<BinaryForm> {
        if p.degree() != 1 || q.degree() != 1 {
            return Err(Error::Invalid("substitution needs linear forms".into()));
        }
        self.to_homog().pull_back(&[p.clone(), q.clone()])
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let d = self.degree();
        self.coeffs.iter().enumerate().fold(Rat::zero(), |acc, (i, c)| {
            acc + c * rat::pow(x, d - i as u32) * rat::pow(y, i as u32)
        })
    }

    /// `g(∂)` applied to `self`.
    pub fn apply_operator(&self, g: &BinaryForm) -> Result<BinaryForm> {
        BinaryForm::from_homog(&self.to_homog().apply_operator(&g.to_homog())?)
    }

    /// Catalecticant for any level `0 ≤ a ≤ d`.
    pub fn catalecticant(&self, a: u32) -> Result<Mat> {
        if a > self.degree() {
            return Err(Error::LevelOutOfRange {
                level: a as usize,
                max: self.degree() as usize,
            });
        }
        Ok(self.to_homog().catalecticant_any(a))
    }

    /// Multiplicity of the root `(1:0)`, i.e. the power of `y` dividing the
    /// form.
    pub fn y_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `g(x, 1)` as a univariate polynomial with ascending coefficients.
    pub(crate) fn dehomogenize(&self) -> univariate::UPoly {
        univariate::UPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// True iff the form has `d` distinct roots in ℙ¹ over the algebraic
    /// closure.
    pub fn squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.y_multiplicity() > 1 {
            return Ok(false);
        }
        let f = self.dehomogenize();
        let g = univariate::UPoly::gcd(&f, &f.derivative());
        Ok(g.degree().unwrap_or(0) == 0)
    }
}

pub(crate) mod univariate {
    //! Dense univariate polynomials over ℚ, ascending coefficients.

    use alloc::vec::Vec;
    use num_traits::Zero;

    use crate::rat::Rat;

    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct UPoly(Vec<Rat>);

    impl UPoly {
        pub fn new(mut c: Vec<Rat>) -> Self {
            while c.last().is_some_and(Zero::is_zero) {
                c.pop();
            }
            UPoly(c)
        }

        pub fn coeffs(&self) -> &[Rat] {
            &self.0
        }

        pub fn degree(&self) -> Option<usize> {
            self.0.len().checked_sub(1)
        }

        pub fn is_zero(&self) -> bool {
            self.0.is_empty()
        }

        pub fn derivative(&self) -> UPoly {
            UPoly::new(
                self.0
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(i, c)| c * Rat::from_integer(i.into()))
                    .collect(),
            )
        }

        pub fn eval(&self, x: &Rat) -> Rat {
            self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
        }

        pub fn rem(&self, divisor: &UPoly) -> UPoly {
            let dd = divisor.degree().expect("nonzero divisor");
            let lead = divisor.0[dd].clone();
            let mut r = self.0.clone();
            while r.len() > dd && !r.is_empty() {
                let k = r.len() - 1;
                let f = &r[k] / &lead;
                if !f.is_zero() {
                    for i in 0..=dd {
                        let t = &f * &divisor.0[i];
                        r[k - dd + i] -= t;
                    }
                }
                r.pop();
                while r.last().is_some_and(Zero::is_zero) {
                    r.pop();
                }
            }
            UPoly::new(r)
        }

        /// Monic gcd; zero only if both inputs are zero.
        pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
            let (mut a, mut b) = (a.clone(), b.clone());
            while !b.is_zero() {
                let r = a.rem(&b);
                a = b;
                b = r;
            }
            if let Some(lead) = a.0.last() {
                let lead = lead.clone();
                for c in a.0.iter_mut() {
                    *c /= &lead;
                }
            }
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};
    use proptest::prelude::*;

    fn poly(m: usize, d: u32, terms: &[(&[u32], i64)]) -> HomogPoly {
        HomogPoly::from_terms(m, d, terms.iter().map(|(e, c)| (e.to_vec(), rat(*c)))).unwrap()
    }

    #[test]
    fn monomial_order_and_index() {
        let mons = monomials(3, 2);
        assert_eq!(
            mons,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        for n in 1..5 {
            for d in 0..6 {
                let ms = monomials(n, d);
                assert_eq!(ms.len(), monomial_count(n, d));
                for (i, a) in ms.iter().enumerate() {
                    assert_eq!(monomial_index(a), i);
                }
            }
        }
    }

    #[test]
    fn catalecticant_of_power_has_rank_one() {
        for d in 2..7 {
            let f = poly(2, d, &[(&[d, 0, 0], 1)]);
            for a in 1..d {
                assert_eq!(f.catalecticant(a).unwrap().rank(), 1);
            }
            assert_eq!(f.cat_lower_bound().unwrap(), 1);
        }
    }

    #[test]
    fn catalecticant_of_x0x1x2() {
        let f = poly(2, 3, &[(&[1, 1, 1], 1)]);
        let c = f.catalecticant(1).unwrap();
        assert_eq!((c.rows(), c.cols()), (6, 3));
        assert_eq!(c.rank(), 3);
    }

    #[test]
    fn catalecticant_kernel_of_x0sq_x1() {
        // ∂₀²F = 2x₁, ∂₀∂₁F = 2x₀, ∂₁²F = 0
        let f = poly(1, 3, &[(&[2, 1], 1)]);
        let c = f.catalecticant(2).unwrap();
        assert_eq!(c.kernel(), vec![vec![rat(0), rat(0), rat(1)]]);
        assert!(f.catalecticant(0).is_err());
        assert!(f.catalecticant(3).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(poly(1, 3, &[(&[3, 0], 1), (&[0, 3], 1)]).cat_lower_bound().unwrap(), 2);
        assert_eq!(HomogPoly::zero(2, 3).cat_lower_bound(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn apply_operator_matches_catalecticant() {
        let f = poly(2, 4, &[(&[2, 1, 1], 3), (&[0, 4, 0], -1), (&[1, 0, 3], 2)]);
        let g = poly(2, 2, &[(&[1, 1, 0], 1), (&[0, 0, 2], 5)]);
        let direct = f.apply_operator(&g).unwrap();
        let via = f.catalecticant(2).unwrap().mul_vec(g.coeffs()).unwrap();
        assert_eq!(direct.coeffs(), &via[..]);
    }

    #[test]
    fn point_identification_round_trip() {
        let l = [rat(1), rat(2), rat(-1)];
        let f = HomogPoly::linear_power(&l, 3).unwrap();
        assert_eq!(f.coeff(&[2, 1, 0]), &rat(6));
        let back = HomogPoly::from_point(2, 3, &f.to_point()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn squarefree_examples() {
        assert!(BinaryForm::from_ints(&[0, 1, 0]).squarefree().unwrap());
        assert!(!BinaryForm::from_ints(&[1, 0, 0]).squarefree().unwrap());
        assert!(!BinaryForm::from_ints(&[0, 0, 1]).squarefree().unwrap());
        // x²y − y³ = y(x − y)(x + y)
        assert!(BinaryForm::from_ints(&[0, 1, 0, -1]).squarefree().unwrap());
        // (x − y)²(x + 2y)
        let g = BinaryForm::vanishing_at(&[(rat(1), rat(1)), (rat(1), rat(1)), (rat(-2), rat(1))]);
        assert!(!g.squarefree().unwrap());
        assert_eq!(BinaryForm::from_ints(&[0, 0]).squarefree(), Err(Error::ZeroPolynomial));
        assert!(BinaryForm::constant(rat(3)).squarefree().unwrap());
    }

    #[test]
    fn conic_restriction_examples() {
        let c = standard_conic();
        let conic_eq = poly(2, 2, &[(&[1, 0, 1], 1), (&[0, 2, 0], -1)]);
        assert!(conic_eq.restrict_to_conic(&c).unwrap().is_zero());
        let x0 = poly(2, 1, &[(&[1, 0, 0], 1)]);
        assert_eq!(x0.restrict_to_conic(&c).unwrap(), BinaryForm::from_ints(&[1, 0, 0]));
        let f = poly(2, 4, &[(&[4, 0, 0], 1), (&[0, 0, 4], 1)]);
        let mut expected = vec![0i64; 9];
        expected[0] = 1;
        expected[8] = 1;
        assert_eq!(f.restrict_to_conic(&c).unwrap(), BinaryForm::from_ints(&expected));
        let degenerate = [c[0].clone(), c[0].clone(), c[2].clone()];
        assert!(matches!(
            f.restrict_to_conic(&degenerate),
            Err(Error::DegenerateParametrization(_))
        ));
    }

    #[test]
    fn curve_identification_sends_powers_to_powers() {
        let c = standard_conic();
        let (s, t) = (rat(2), rat(-3));
        let p = [&s * &s, &s * &t, &t * &t];
        let point = crate::scheme::veronese_raw(&p, 3);
        let g = curve_point_to_binary(&point, 3, &c).unwrap();
        assert_eq!(g, BinaryForm::linear_power(&s, &t, 6));
        assert_eq!(binary_to_curve_point(&g, 3, &c).unwrap(), point);
        let off = crate::scheme::veronese_raw(&[rat(1), rat(0), rat(1)], 3);
        assert_eq!(curve_point_to_binary(&off, 3, &c), Err(Error::NotOnCurveSpan));
    }

    fn small_poly(m: usize, d: u32) -> impl Strategy<Value = HomogPoly> {
        proptest::collection::vec(-3i64..4, monomial_count(m + 1, d)).prop_map(move |v| {
            HomogPoly::new(m, d, v.into_iter().map(rat).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn apolarity_is_bilinear(
            (f, g) in (small_poly(2, 4), small_poly(2, 4)),
            a in -5i64..6, b in 1i64..4, level in 1u32..4,
        ) {
            let (alpha, beta) = (ratio(a, b), rat(b - 2));
            let combo = HomogPoly::lin_comb(&alpha, &f, &beta, &g).unwrap();
            let lhs = combo.catalecticant(level).unwrap();
            let rhs = Mat::lin_comb(
                &alpha, &f.catalecticant(level).unwrap(),
                &beta, &g.catalecticant(level).unwrap(),
            ).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn catalecticant_rank_symmetry(f in (1usize..3, 2u32..6).prop_flat_map(|(m, d)| small_poly(m, d))) {
            let d = f.degree();
            for a in 1..d {
                prop_assert_eq!(
                    f.catalecticant(a).unwrap().rank(),
                    f.catalecticant(d - a).unwrap().rank()
                );
            }
        }

        #[test]
        fn catalecticant_rank_at_most_number_of_powers(
            forms in proptest::collection::vec(proptest::collection::vec(-3i64..4, 3), 1..5),
            level in 1u32..4,
        ) {
            let d = 4;
            let mut f = HomogPoly::zero(2, d);
            for l in &forms {
                let l: Vec<Rat> = l.iter().map(|&x| rat(x)).collect();
                let p = HomogPoly::linear_power(&l, d).unwrap();
                f = HomogPoly::lin_comb(&rat(1), &f, &rat(1), &p).unwrap();
            }
            prop_assert!(f.catalecticant(level).unwrap().rank() <= forms.len());
        }

        #[test]
        fn conic_pullback_is_multiplicative(f in small_poly(2, 2), g in small_poly(2, 3)) {
            let c = standard_conic();
            let fg = f.mul(&g).unwrap();
            let lhs = fg.restrict_to_conic(&c).unwrap();
            let rhs = f.restrict_to_conic(&c).unwrap().mul(&g.restrict_to_conic(&c).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
