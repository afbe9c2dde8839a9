//! Seeded generators for the sharpness constructions on the conic, the
//! split round-trip family, planted-line schemes, and the binary probe of the
//! rank versus border-rank bound.
//!
//! Every generic choice is a seeded rational sample followed by exact checks
//! of the bad loci; failing samples are redrawn from the same generator.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{self, BinaryForm, HomogPoly};
use crate::rat::{rat, Rat};
use crate::scheme::{self, CurvComponent, Line, ProjPoint, Scheme};
use crate::sylvester::{self, Terms};

/// Sampling attempts before a generator gives up.
pub const MAX_ATTEMPTS: usize = 256;

/// A claimed integer invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Exactly(usize),
    AtMost(usize),
    AtLeast(usize),
}

impl Claim {
    pub fn holds(&self, value: usize) -> bool {
        match *self {
            Claim::Exactly(n) => value == n,
            Claim::AtMost(n) => value <= n,
            Claim::AtLeast(n) => value >= n,
        }
    }
}

/// A generated instance: the form, its point, the named schemes, the claimed
/// invariants, and the values recomputed by the pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleBundle {
    pub construction: &'static str,
    pub d: u32,
    pub seed: u64,
    pub form: HomogPoly,
    pub point: Vec<Rat>,
    pub schemes: BTreeMap<String, Scheme>,
    pub claims: BTreeMap<String, Claim>,
    pub observed: BTreeMap<String, usize>,
    /// Claims not established by the pipeline itself.
    pub trusted: Vec<&'static str>,
}

impl ExampleBundle {
    /// Claims whose observed value is present and disagrees.
    pub fn violated_claims(&self) -> Vec<&str> {
        self.claims
            .iter()
            .filter(|(k, c)| self.observed.get(*k).is_some_and(|v| !c.holds(*v)))
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `(s², st, t²)`.
pub fn conic_point(s: &Rat, t: &Rat) -> Result<ProjPoint> {
    ProjPoint::new(vec![s * s, s * t, t * t])
}

/// `k` distinct integers from `[-bound, bound]` avoiding `avoid`.
fn distinct_ints(rng: &mut ChaCha8Rng, k: usize, bound: i64, avoid: &[i64]) -> Vec<i64> {
    let mut pool: Vec<i64> = (-bound..=bound).filter(|v| !avoid.contains(v)).collect();
    pool.shuffle(rng);
    pool.truncate(k);
    pool
}

fn key(s: &str) -> String {
    String::from(s)
}

/// The single projective point of `⟨U⟩ ∩ ⟨V⟩`, if the intersection is one
/// dimensional.
fn unique_common_point(u: &[Vec<Rat>], v: &[Vec<Rat>]) -> Result<Option<Vec<Rat>>> {
    let dim = u[0].len();
    let common = linalg::intersect_spans(u, v, dim)?;
    Ok(if common.len() == 1 {
        Some(common.into_iter().next().expect("one vector"))
    } else {
        None
    })
}

/// Length-3 jet of the conic at `(1:0:0)`, germ `(1, t, t²)`.
pub fn conic_jet3() -> CurvComponent {
    CurvComponent::from_ints(&[1, 0, 0], &[&[0, 1, 0], &[0, 0, 1]]).expect("smooth germ")
}

/// Degree-3 conic jet `Z` and a point `P ∈ ⟨ν_d(Z)⟩` off the tangent line,
/// with `sbr(P) = 3` and `sr(P) = 2d − 1`.
///
/// `P` is the common point of `⟨ν_d(Z)⟩` and the span of `2d − 1` seeded
/// rational conic points `S`, which is a point of `⟨ν_d(Z)⟩` and comes with
/// an explicit decomposition of length `2d − 1`.
pub fn gen_example_00(d: u32, seed: u64) -> Result<ExampleBundle> {
    if d < 4 {
        return Err(Error::precondition("d_at_least_4", alloc::format!("d = {d}")));
    }
    let mut rng = rng_for(seed);
    let z = Scheme::new(2, vec![conic_jet3()])?;
    let tangent = Scheme::new(2, vec![conic_jet3().truncate(2)])?;
    let zvecs = scheme::scheme_span(&z, d)?;
    let r = 2 * d as usize - 1;
    for _ in 0..MAX_ATTEMPTS {
        let params = distinct_ints(&mut rng, r, 3 * d as i64, &[]);
        let pts = params
            .iter()
            .map(|a| conic_point(&rat(*a), &rat(1)))
            .collect::<Result<Vec<_>>>()?;
        let s = Scheme::reduced(2, pts)?;
        let svecs = s.span_vectors(d);
        let Some(p) = unique_common_point(&svecs, &zvecs)? else {
            continue;
        };
        if scheme::in_scheme_span(&p, &tangent, d)? || !scheme::minimal_for(&p, &s, d)? {
            continue;
        }
        let form = HomogPoly::from_point(2, d, &p)?;
        let mut observed = BTreeMap::new();
        observed.insert(key("cat_lower_bound"), form.cat_lower_bound()?);
        let g = poly::curve_point_to_binary(&p, d, &poly::standard_conic())?;
        let cert = sylvester::binary_rank(&g, seed)?;
        observed.insert(key("sbr"), cert.border_rank);
        observed.insert(key("sr"), cert.rank);
        observed.insert(key("sum"), cert.border_rank + cert.rank);
        observed.insert(key("h1_z"), scheme::h1(&z, d)?);
        let mut claims = BTreeMap::new();
        claims.insert(key("cat_lower_bound"), Claim::Exactly(3));
        claims.insert(key("sbr"), Claim::Exactly(3));
        claims.insert(key("sr"), Claim::Exactly(r));
        claims.insert(key("sum"), Claim::Exactly(2 * d as usize + 2));
        claims.insert(key("h1_z"), Claim::Exactly(0));
        let mut schemes = BTreeMap::new();
        schemes.insert(key("S"), s);
        schemes.insert(key("Z"), z);
        return Ok(ExampleBundle {
            construction: "conic-jet-sharpness",
            d,
            seed,
            form,
            point: p,
            schemes,
            claims,
            observed,
            trusted: vec!["sr_on_the_conic_equals_ambient_sr"],
        });
    }
    Err(Error::Invalid("no admissible sample found".into()))
}

/// Two disjoint sets of `d + 1` rational conic points whose spans meet in a
/// single point `P`, which then has two distinct minimal decompositions.
pub fn gen_example_oplus(d: u32, seed: u64) -> Result<ExampleBundle> {
    if d < 4 {
        return Err(Error::precondition("d_at_least_4", alloc::format!("d = {d}")));
    }
    let mut rng = rng_for(seed);
    let n = d as usize + 1;
    for _ in 0..MAX_ATTEMPTS {
        let params = distinct_ints(&mut rng, 2 * n, 3 * d as i64, &[]);
        let pts = params
            .iter()
            .map(|a| conic_point(&rat(*a), &rat(1)))
            .collect::<Result<Vec<_>>>()?;
        let s = Scheme::reduced(2, pts[..n].to_vec())?;
        let s2 = Scheme::reduced(2, pts[n..].to_vec())?;
        let union = s.union(&s2)?;
        let (h_s, h_s2, h_u) = (scheme::h1(&s, d)?, scheme::h1(&s2, d)?, union.defect(d));
        let Some(p) = unique_common_point(&s.span_vectors(d), &s2.span_vectors(d))? else {
            continue;
        };
        if !scheme::minimal_for(&p, &s, d)? || !scheme::minimal_for(&p, &s2, d)? {
            continue;
        }
        let form = HomogPoly::from_point(2, d, &p)?;
        let mut observed = BTreeMap::new();
        observed.insert(key("h1_s"), h_s);
        observed.insert(key("h1_s_prime"), h_s2);
        observed.insert(key("h1_union"), h_u);
        observed.insert(key("span_intersection_dim"), 1);
        let cat = form.cat_lower_bound()?;
        observed.insert(key("cat_lower_bound"), cat);
        observed.insert(key("sr"), n);
        let mut trusted = Vec::new();
        // points on a conic impose at most 2a+1 conditions in degree a, so
        // the catalecticants certify sbr ≥ d+1 only for even d
        if cat >= n {
            observed.insert(key("sbr"), cat);
        } else {
            trusted.push("sbr_at_least_d_plus_1");
        }
        observed.insert(key("minimal_decompositions_found"), 2);
        let mut claims = BTreeMap::new();
        claims.insert(key("h1_s"), Claim::Exactly(0));
        claims.insert(key("h1_s_prime"), Claim::Exactly(0));
        claims.insert(key("h1_union"), Claim::Exactly(1));
        claims.insert(key("span_intersection_dim"), Claim::Exactly(1));
        claims.insert(key("cat_lower_bound"), Claim::Exactly(2 * (d as usize / 2) + 1));
        claims.insert(key("sr"), Claim::AtMost(n));
        claims.insert(key("sbr"), Claim::AtLeast(n));
        claims.insert(key("minimal_decompositions_found"), Claim::AtLeast(2));
        let mut schemes = BTreeMap::new();
        schemes.insert(key("S"), s);
        schemes.insert(key("S_prime"), s2);
        return Ok(ExampleBundle {
            construction: "conic-two-decompositions",
            d,
            seed,
            form,
            point: p,
            schemes,
            claims,
            observed,
            trusted,
        });
    }
    Err(Error::Invalid("no admissible sample found".into()))
}

/// A planted split instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitInstance {
    pub d: u32,
    pub seed: u64,
    pub line: Line,
    pub s: Scheme,
    pub z: Scheme,
    pub point: Vec<Rat>,
    pub s1: Scheme,
    pub s2: Scheme,
    pub z1: Scheme,
}

fn random_point(rng: &mut ChaCha8Rng, bound: i64) -> Vec<Rat> {
    (0..3).map(|_| rat(rng.gen_range(-bound..=bound))).collect()
}

fn random_line(rng: &mut ChaCha8Rng) -> (Line, [Vec<Rat>; 2]) {
    loop {
        let u = random_point(rng, 5);
        let v = random_point(rng, 5);
        if let Ok(l) = Line::new(&u, &v) {
            let b = l.basis().clone();
            return (l, b);
        }
    }
}

fn on_line(basis: &[Vec<Rat>; 2], s: &Rat, t: &Rat) -> Vec<Rat> {
    basis[0]
        .iter()
        .zip(&basis[1])
        .map(|(a, b)| s * a + t * b)
        .collect()
}

/// Plants `Z = Z₁ ⊔ S₂` and `S = S₁ ⊔ S₂` with `Z₁` a length-`z1` jet inside
/// a random line `ℓ`, `S₂` a set of `t` points off `ℓ`, and `S₁` the
/// `d − z1 + 2` points of `ℓ` read off from an exact binary decomposition of
/// the binary part.
pub fn gen_split_family(d: u32, seed: u64, z1: usize, t: usize) -> Result<SplitInstance> {
    if d < 4 {
        return Err(Error::precondition("d_at_least_4", alloc::format!("d = {d}")));
    }
    if z1 < 2 {
        return Err(Error::precondition(
            "z1_at_least_2",
            "the jet on the line must be non-reduced",
        ));
    }
    let r = d as usize + 2 - z1;
    if r <= z1 {
        return Err(Error::precondition(
            "rank_exceeds_border_rank",
            alloc::format!("z1 = {z1} needs 2·z1 ≤ d+1"),
        ));
    }
    if r + z1 + 2 * t > 2 * d as usize + 1 {
        return Err(Error::precondition(
            "sum_at_most_2d_plus_1",
            alloc::format!("t = {t} needs 2t ≤ d−1"),
        ));
    }
    let mut rng = rng_for(seed);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let (line, basis) = random_line(&mut rng);
        let params = line.parametrization();
        // jet support at parameter (1:0), straight germ along the line
        let mut jets = vec![basis[1].clone()];
        jets.resize(z1 - 1, vec![rat(0); 3]);
        let jet = CurvComponent::new(basis[0].clone(), jets)?;
        let z1s = Scheme::new(2, vec![jet])?;
        let roots = distinct_ints(&mut rng, r, 4 * d as i64, &[]);
        let s1_guess = roots
            .iter()
            .map(|a| ProjPoint::new(on_line(&basis, &rat(*a), &rat(1))))
            .collect::<Result<Vec<_>>>()?;
        let s1_guess = Scheme::reduced(2, s1_guess)?;
        let Some(q) = unique_common_point(&s1_guess.span_vectors(d), &z1s.span_vectors(d))? else {
            continue;
        };
        if !scheme::minimal_for(&q, &z1s, d)? {
            continue;
        }
        // recover S₁ from the binary part with the planted witness
        let g = poly::curve_point_to_binary(&q, d, &params)?;
        let witness = BinaryForm::vanishing_at(
            &roots.iter().map(|a| (rat(*a), rat(1))).collect::<Vec<_>>(),
        );
        let dec = sylvester::decompose_with_witness(&g, &witness, sylvester::DEFAULT_PRECISION)?;
        let Terms::Exact(terms) = dec.terms else {
            continue;
        };
        let s1_pts = terms
            .iter()
            .map(|term| ProjPoint::new(on_line(&basis, &term.form.0, &term.form.1)))
            .collect::<Result<Vec<_>>>()?;
        let s1 = Scheme::reduced(2, s1_pts)?;
        if s1.degree() != r || !scheme::minimal_for(&q, &s1, d)? {
            continue;
        }
        let mut s2_pts = Vec::new();
        while s2_pts.len() < t {
            let c = ProjPoint::new(random_point(&mut rng, 9));
            match c {
                Ok(p) if !line.contains(&p) && !s2_pts.contains(&p) => s2_pts.push(p),
                _ => {}
            }
        }
        let s2 = Scheme::reduced(2, s2_pts.clone())?;
        let mut point = q.clone();
        for p in &s2_pts {
            let c = rat(rng.gen_range(1..=9)) * if rng.gen::<bool>() { rat(1) } else { rat(-1) };
            crate::rat::axpy(&c, &scheme::veronese(p, d), &mut point);
        }
        let s = s1.union(&s2)?;
        let z = z1s.union(&s2)?;
        for w in [&s, &z] {
            if !scheme::minimal_for(&point, w, d)? {
                continue 'attempt;
            }
        }
        if s.union(&z)?.defect(d) != 1 {
            continue;
        }
        return Ok(SplitInstance {
            d,
            seed,
            line,
            s,
            z,
            point,
            s1,
            s2,
            z1: z1s,
        });
    }
    Err(Error::Invalid("no admissible sample found".into()))
}

/// Jet sizes for a seeded split instance: `z1 ∈ [2, (d+1)/2]`,
/// `t ∈ [0, (d−1)/2]`.
pub fn split_shape(d: u32, seed: u64) -> (usize, usize) {
    let mut rng = rng_for(seed ^ 0x5b1d_5b1d);
    let z1 = rng.gen_range(2..=(d as usize).div_ceil(2));
    let t = rng.gen_range(0..=(d as usize - 1) / 2);
    (z1, t)
}

/// A scheme with a planted collinear part of degree `k ∈ [x+2, 2x+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlantedLine {
    pub x: u32,
    pub line: Line,
    pub scheme: Scheme,
    pub collinear_degree: usize,
}

/// Collinear part: reduced points and straight jets inside the line; off the
/// line: points with no three of them collinear with a point of the line.
pub fn gen_planted_line(x: u32, seed: u64) -> Result<PlantedLine> {
    let mut rng = rng_for(seed);
    let k = rng.gen_range(x as usize + 2..=2 * x as usize + 1);
    let off = rng.gen_range(0..=2 * x as usize + 1 - k);
    let (line, basis) = random_line(&mut rng);
    let mut comps = Vec::new();
    let mut left = k;
    let params = distinct_ints(&mut rng, k, 6 * x as i64 + 6, &[]);
    let mut pi = params.iter();
    while left > 0 {
        let len = if rng.gen_bool(0.3) { rng.gen_range(1..=left.min(3)) } else { 1 };
        let a = rat(*pi.next().expect("enough parameters"));
        let p = on_line(&basis, &a, &rat(1));
        let mut jets = Vec::new();
        if len > 1 {
            jets.push(basis[0].clone());
            jets.resize(len - 1, vec![rat(0); 3]);
        }
        comps.push(CurvComponent::new(p, jets)?);
        left -= len;
    }
    let mut offs: Vec<ProjPoint> = Vec::new();
    while offs.len() < off {
        let Ok(p) = ProjPoint::new(random_point(&mut rng, 9)) else {
            continue;
        };
        if line.contains(&p) || offs.contains(&p) {
            continue;
        }
        offs.push(p);
    }
    comps.extend(offs.into_iter().map(CurvComponent::point));
    let scheme = Scheme::new(2, comps)?;
    Ok(PlantedLine {
        x,
        line,
        scheme,
        collinear_degree: k,
    })
}

/// One row of the binary probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeRow {
    pub d: u32,
    pub border_rank: usize,
    pub samples: usize,
    pub max_rank: usize,
    /// `d·(b − 1)`.
    pub bound: usize,
    pub within_bound: bool,
    /// `b = 2` and rank `d`: the tangential case.
    pub tangential_equality: bool,
}

/// Forms in the span of `ν_d` of the scheme on ℙ¹ made of a jet of length
/// `jet` at `(1:0)` and the points `(aᵢ:1)`, with random nonzero weights.
fn probe_form(rng: &mut ChaCha8Rng, d: u32, jet: usize, points: &[i64]) -> BinaryForm {
    let mut coeffs = vec![rat(0); d as usize + 1];
    for c in coeffs.iter_mut().take(jet) {
        *c = rat(rng.gen_range(1..=7));
    }
    let mut g = BinaryForm::new(coeffs);
    for a in points {
        let term = BinaryForm::linear_power(&rat(*a), &rat(1), d).scale(&rat(rng.gen_range(1..=7)));
        g = g.add(&term).expect("same degree");
    }
    g
}

/// For `d = 3..=dmax` and `b = 2..=⌊(d+1)/2⌋`, samples binary forms of
/// border rank `b` (one jet of each length `2..=b` completed by points, plus
/// a reduced sample) and records the largest rank.
pub fn probe_q1_binary(dmax: u32, seed: u64) -> Result<Vec<ProbeRow>> {
    if dmax < 3 {
        return Err(Error::precondition("dmax_at_least_3", alloc::format!("dmax = {dmax}")));
    }
    let mut rng = rng_for(seed);
    let mut rows = Vec::new();
    for d in 3..=dmax {
        for b in 2..=(d as usize).div_ceil(2) {
            let mut max_rank = 0;
            let mut samples = 0;
            for jet in (1..=b).rev() {
                // jet == 1 is the reduced sample: b points, no jet
                let (jet_len, npts) = if jet == 1 { (0, b) } else { (jet, b - jet) };
                let pts = distinct_ints(&mut rng, npts, 3 * d as i64, &[]);
                let g = probe_form(&mut rng, d, jet_len, &pts);
                let cert = sylvester::binary_rank(&g, seed)?;
                if cert.border_rank != b {
                    continue;
                }
                samples += 1;
                max_rank = max_rank.max(cert.rank);
            }
            let bound = d as usize * (b - 1);
            rows.push(ProbeRow {
                d,
                border_rank: b,
                samples,
                max_rank,
                bound,
                within_bound: max_rank <= bound,
                tangential_equality: b == 2 && max_rank == d as usize,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{self, SplitOutcome};

    #[test]
    fn conic_jet_bundle_claims() {
        for d in [4, 5] {
            let b = gen_example_00(d, 0).unwrap();
            assert!(b.violated_claims().is_empty(), "{:?}", b.observed);
            assert_eq!(b.observed["sr"], 2 * d as usize - 1);
            assert_eq!(b.observed["cat_lower_bound"], 3);
        }
        assert!(gen_example_00(3, 0).is_err());
    }

    #[test]
    fn two_decomposition_bundle() {
        let b = gen_example_oplus(4, 1).unwrap();
        assert!(b.violated_claims().is_empty(), "{:?}", b.observed);
        assert_eq!(b.observed["cat_lower_bound"], 5);
        let odd = gen_example_oplus(5, 1).unwrap();
        assert!(odd.violated_claims().is_empty(), "{:?}", odd.observed);
        assert_eq!(odd.observed["cat_lower_bound"], 5);
        assert_eq!(odd.trusted, vec!["sbr_at_least_d_plus_1"]);
        let (s, s2) = (&b.schemes["S"], &b.schemes["S_prime"]);
        assert_eq!(structure::joint_dependence(s, s2, &b.point, 4).unwrap(), 1);
    }

    #[test]
    fn split_family_shapes() {
        let inst = gen_split_family(5, 3, 3, 1).unwrap();
        assert_eq!((inst.s.degree(), inst.z.degree()), (5, 4));
        let inst = gen_split_family(6, 3, 2, 2).unwrap();
        assert_eq!((inst.s.degree(), inst.z.degree()), (8, 4));
        assert!(matches!(
            gen_split_family(5, 0, 1, 1),
            Err(Error::Precondition { name: "z1_at_least_2", .. })
        ));
    }

    #[test]
    fn split_family_round_trip() {
        for seed in 0..6 {
            let d = 5 + (seed as u32 % 3);
            let (z1, t) = split_shape(d, seed);
            let inst = gen_split_family(d, seed, z1, t).unwrap();
            match structure::split_theorem(&inst.s, &inst.z, &inst.point, d, seed).unwrap() {
                SplitOutcome::Certified(c) => {
                    assert_eq!(c.line, inst.line);
                    assert_eq!(c.s2, inst.s2);
                    assert_eq!(c.z1, inst.z1);
                    assert_eq!(c.binary_rank, d as usize + 2 - z1);
                }
                SplitOutcome::Counterexample(r) => panic!("seed {seed}: {:?}", r.failed),
            }
        }
    }

    #[test]
    fn conic_bundle_hits_the_sharpness_gate() {
        let b = gen_example_00(4, 2).unwrap();
        let err = structure::split_theorem(&b.schemes["S"], &b.schemes["Z"], &b.point, 4, 0)
            .unwrap_err();
        assert!(matches!(err, Error::Precondition { name: "sum_at_most_2d_plus_1", .. }));
    }

    #[test]
    fn planted_lines_are_found() {
        for seed in 0..10 {
            let x = 3 + (seed as u32 % 3);
            let pl = gen_planted_line(x, seed).unwrap();
            let sl = structure::find_special_line(&pl.scheme, x).unwrap();
            assert_eq!(sl.line, pl.line);
            assert!(sl.formula_holds(x) && sl.unique());
        }
    }

    #[test]
    fn probe_small_degrees() {
        let rows = probe_q1_binary(6, 0).unwrap();
        let row = |d, b| rows.iter().find(|r| r.d == d && r.border_rank == b).unwrap().clone();
        assert_eq!(row(3, 2).max_rank, 3);
        assert_eq!(row(5, 2).max_rank, 5);
        assert!(row(5, 2).tangential_equality);
        assert_eq!(row(5, 3).max_rank, 4);
        assert!(rows.iter().all(|r| r.within_bound && r.samples > 0));
    }
}
