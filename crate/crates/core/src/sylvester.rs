//! Symmetric rank and border rank of binary forms (Sylvester's method).
//!
//! For `g` of degree `d`, the kernel `K_r` of the level-`r` catalecticant is
//! the space of degree-`r` forms `h` with `h(∂)g = 0`. Since
//! `h(∂)(ax+by)^d ∝ h(a,b)·(ax+by)^{d−r}`, a squarefree `h ∈ K_r` with roots
//! `(aᵢ:bᵢ)` yields `g = Σ cᵢ (aᵢx + bᵢy)^d`.
//!
//! The border rank is the first `r` with `K_r ≠ 0`. The rank is the first `r`
//! whose kernel contains a squarefree element; squarefree elements are
//! searched among the echelon basis and then among seeded random integer
//! combinations. After [`ESCALATION_BOUND`] failed combinations the level is
//! given up, and the trace records it.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::numeric::{self, CRat};
use crate::poly::BinaryForm;
use crate::rat::{self, Rat};

/// Random combinations tried per level before moving on.
pub const ESCALATION_BOUND: usize = 64;
pub const DEFAULT_PRECISION: u32 = 128;
pub const MAX_PRECISION: u32 = 1024;

/// How a witness was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSource {
    /// Index into the echelon kernel basis.
    BasisVector(usize),
    /// 1-based attempt number among the random combinations.
    RandomCombination(usize),
    /// Kernel element forced to vanish at random rational points so that it
    /// splits over ℚ.
    Interpolation { attempt: usize },
    /// Supplied by the caller.
    Given,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelOutcome {
    EmptyKernel,
    /// One-dimensional kernel whose generator is not squarefree; decided
    /// exactly.
    NotSquarefree,
    /// Basis and all sampled combinations were not squarefree.
    Exhausted,
    Found(WitnessSource),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelTrace {
    pub level: usize,
    pub kernel_dim: usize,
    pub samples: usize,
    pub outcome: LevelOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTrace {
    pub seed: u64,
    pub escalation_bound: usize,
    pub levels: Vec<LevelTrace>,
}

/// `coef · (a x + b y)^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactTerm {
    pub form: (Rat, Rat),
    pub coef: Rat,
}

/// Complex term with dyadic rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericTerm {
    pub form: (CRat, CRat),
    pub coef: CRat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Terms {
    Exact(Vec<ExactTerm>),
    Numeric(Vec<NumericTerm>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub terms: Terms,
    /// Working precision of the numeric path.
    pub precision_bits: Option<u32>,
    /// Exact upper bound on the largest coefficient modulus of
    /// `g − Σ cᵢ Lᵢ^d`; zero for exact decompositions.
    pub residual_bound: Rat,
}

impl Decomposition {
    pub fn is_exact(&self) -> bool {
        matches!(self.terms, Terms::Exact(_))
    }

    pub fn len(&self) -> usize {
        match &self.terms {
            Terms::Exact(t) => t.len(),
            Terms::Numeric(t) => t.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    pub border_rank: usize,
    /// Squarefree apolar form of degree `rank`.
    pub witness: BinaryForm,
    pub witness_source: WitnessSource,
    pub search: SearchTrace,
    pub decomposition: Option<Decomposition>,
}

fn nonzero(g: &BinaryForm) -> Result<()> {
    if g.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}

fn kernel_at(g: &BinaryForm, r: u32) -> Vec<Vec<Rat>> {
    g.catalecticant(r).expect("level within degree").kernel()
}

/// Smallest `r ≥ 1` with a nonzero apolar form of degree `r`.
pub fn binary_border_rank(g: &BinaryForm) -> Result<usize> {
    nonzero(g)?;
    let d = g.degree();
    if d == 0 {
        return Ok(1);
    }
    (1..=d)
        .find(|&r| !kernel_at(g, r).is_empty())
        .map(|r| r as usize)
        .ok_or_else(|| Error::Invalid("no apolar form up to the degree".into()))
}

/// True iff `h(∂)g = 0`.
pub fn is_apolar(g: &BinaryForm, h: &BinaryForm) -> bool {
    h.degree() <= g.degree() && g.apply_operator(h).is_ok_and(|r| r.is_zero())
}

fn normalized(v: Vec<Rat>) -> BinaryForm {
    BinaryForm::new(rat::normalize_first_one(&v).unwrap_or(v))
}

fn random_combination(basis: &[Vec<Rat>], rng: &mut ChaCha8Rng) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); basis[0].len()];
    for b in basis {
        let c: i64 = rng.gen_range(-16..=16);
        if c != 0 {
            rat::axpy(&rat::rat(c), b, &mut acc);
        }
    }
    acc
}

/// Symmetric rank with a squarefree apolar witness.
pub fn binary_rank(g: &BinaryForm, seed: u64) -> Result<RankCertificate> {
    let border_rank = binary_border_rank(g)?;
    let d = g.degree();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut levels = Vec::new();
    if d == 0 {
        return Ok(RankCertificate {
            rank: 1,
            border_rank,
            witness: BinaryForm::constant(Rat::one()),
            witness_source: WitnessSource::BasisVector(0),
            search: SearchTrace {
                seed,
                escalation_bound: ESCALATION_BOUND,
                levels,
            },
            decomposition: None,
        });
    }
    for r in border_rank as u32..=d {
        let kernel = kernel_at(g, r);
        let mut trace = LevelTrace {
            level: r as usize,
            kernel_dim: kernel.len(),
            samples: 0,
            outcome: LevelOutcome::EmptyKernel,
        };
        let mut found = None;
        if let Some(i) = kernel
            .iter()
            .position(|v| BinaryForm::new(v.clone()).squarefree().unwrap_or(false))
        {
            found = Some((normalized(kernel[i].clone()), WitnessSource::BasisVector(i)));
        } else if kernel.len() == 1 {
            trace.outcome = LevelOutcome::NotSquarefree;
        } else if kernel.len() > 1 {
            trace.outcome = LevelOutcome::Exhausted;
            for attempt in 1..=ESCALATION_BOUND {
                trace.samples = attempt;
                let v = random_combination(&kernel, &mut rng);
                let h = BinaryForm::new(v);
                if !h.is_zero() && h.squarefree()? {
                    found = Some((
                        normalized(h.coeffs().to_vec()),
                        WitnessSource::RandomCombination(attempt),
                    ));
                    break;
                }
            }
        }
        if let Some((witness, source)) = found {
            trace.outcome = LevelOutcome::Found(source.clone());
            levels.push(trace);
            debug_assert!(is_apolar(g, &witness));
            return Ok(RankCertificate {
                rank: r as usize,
                border_rank,
                witness,
                witness_source: source,
                search: SearchTrace {
                    seed,
                    escalation_bound: ESCALATION_BOUND,
                    levels,
                },
                decomposition: None,
            });
        }
        levels.push(trace);
    }
    Err(Error::Invalid(
        "no squarefree apolar form found up to the degree".into(),
    ))
}

/// Roots `(a:b)` of `h`, each normalized to `(1:0)` or `(z:1)`, if `h` is
/// squarefree and splits into linear factors over ℚ.
pub fn rational_roots(h: &BinaryForm) -> Option<Vec<(Rat, Rat)>> {
    if h.is_zero() || !h.squarefree().ok()? {
        return None;
    }
    let mut roots = Vec::new();
    if h.y_multiplicity() == 1 {
        roots.push((Rat::one(), Rat::zero()));
    }
    let f = h.dehomogenize();
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Some(roots);
    }
    let mut found: Vec<Rat> = Vec::new();
    if n == 1 {
        found.push(-&f.coeffs()[0] / &f.coeffs()[1]);
    } else {
        let approx = numeric::complex_roots(f.coeffs(), DEFAULT_PRECISION).ok()?;
        let tiny = Rat::new(One::one(), num_bigint::BigInt::one() << 32u32);
        for z in approx {
            if z.im.abs() > tiny {
                return None;
            }
            let hit = numeric::convergents(&z.re, 62)
                .into_iter()
                .rev()
                .find(|q| f.eval(q).is_zero())?;
            if !found.contains(&hit) {
                found.push(hit);
            }
        }
    }
    if found.len() != n {
        return None;
    }
    found.sort();
    roots.extend(found.into_iter().map(|z| (z, Rat::one())));
    Some(roots)
}

fn exact_decomposition(g: &BinaryForm, roots: &[(Rat, Rat)]) -> Result<Decomposition> {
    let d = g.degree();
    let cols: Vec<Vec<Rat>> = roots
        .iter()
        .map(|(a, b)| BinaryForm::linear_power(a, b, d).coeffs().to_vec())
        .collect();
    let coefs = Mat::from_cols(d as usize + 1, &cols)?
        .solve(g.coeffs())?
        .ok_or_else(|| Error::Invalid("witness roots do not decompose the form".into()))?;
    let terms = roots
        .iter()
        .zip(coefs)
        .map(|((a, b), coef)| ExactTerm {
            form: (a.clone(), b.clone()),
            coef,
        })
        .collect();
    Ok(Decomposition {
        terms: Terms::Exact(terms),
        precision_bits: None,
        residual_bound: Rat::zero(),
    })
}

fn crat_linear_power(a: &CRat, b: &CRat, d: u32) -> Vec<CRat> {
    let d_us = d as usize;
    (0..=d_us)
        .map(|i| {
            a.pow(d - i as u32)
                .mul(&b.pow(i as u32))
                .scale(&rat::int(&rat::binomial(d_us, i)))
        })
        .collect()
}

/// Exact bound on the largest coefficient modulus of `g − Σ cᵢ Lᵢ^d`.
pub fn numeric_residual(g: &BinaryForm, terms: &[NumericTerm]) -> Rat {
    let d = g.degree();
    let mut acc: Vec<CRat> = g.coeffs().iter().map(|c| CRat::real(-c.clone())).collect();
    for t in terms {
        for (slot, v) in acc.iter_mut().zip(crat_linear_power(&t.form.0, &t.form.1, d)) {
            *slot = slot.add(&v.mul(&t.coef));
        }
    }
    acc.iter()
        .map(CRat::norm_bound)
        .fold(Rat::zero(), |a, b| if b > a { b } else { a })
}

fn numeric_attempt(g: &BinaryForm, h: &BinaryForm, prec: u32) -> Result<Decomposition> {
    let d = g.degree();
    let mut forms: Vec<(CRat, CRat)> = Vec::new();
    if h.y_multiplicity() == 1 {
        forms.push((CRat::one(), CRat::zero()));
    }
    let f = h.dehomogenize();
    if f.degree().unwrap_or(0) > 0 {
        for z in numeric::complex_roots(f.coeffs(), prec)? {
            forms.push((z, CRat::one()));
        }
    }
    let cols: Vec<Vec<CRat>> = forms.iter().map(|(a, b)| crat_linear_power(a, b, d)).collect();
    let rhs: Vec<CRat> = g.coeffs().iter().map(|c| CRat::real(c.clone())).collect();
    let coefs =
        numeric::solve_complex(&cols, &rhs, prec).ok_or(Error::RootRefinement { bits: prec })?;
    let terms: Vec<NumericTerm> = forms
        .into_iter()
        .zip(coefs)
        .map(|(form, coef)| NumericTerm { form, coef })
        .collect();
    let residual_bound = numeric_residual(g, &terms);
    Ok(Decomposition {
        terms: Terms::Numeric(terms),
        precision_bits: Some(prec),
        residual_bound,
    })
}

/// Acceptance threshold for numeric residuals: `2^-prec · max(1, ‖g‖∞)`.
pub fn residual_threshold(g: &BinaryForm, prec: u32) -> Rat {
    let norm = g
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .fold(Rat::one(), |a, b| if b > a { b } else { a });
    norm / Rat::from_integer(num_bigint::BigInt::one() << prec)
}

/// Decomposition from a given squarefree apolar witness: exact when the
/// witness splits over ℚ, numeric otherwise (precision doubled on failure up
/// to [`MAX_PRECISION`]).
pub fn decompose_with_witness(
    g: &BinaryForm,
    witness: &BinaryForm,
    precision: u32,
) -> Result<Decomposition> {
    nonzero(g)?;
    if witness.is_zero() || !witness.squarefree()? || !is_apolar(g, witness) {
        return Err(Error::Invalid("witness must be a squarefree apolar form".into()));
    }
    if let Some(roots) = rational_roots(witness) {
        return exact_decomposition(g, &roots);
    }
    let mut prec = precision.max(32);
    loop {
        if let Ok(dec) = numeric_attempt(g, witness, prec) {
            if dec.residual_bound <= residual_threshold(g, precision.max(32)) {
                return Ok(dec);
            }
        }
        if prec >= MAX_PRECISION {
            return Err(Error::RootRefinement { bits: prec });
        }
        prec = (prec * 2).min(MAX_PRECISION);
    }
}

/// Looks for a rank-level kernel element vanishing at random rational points
/// that splits completely over ℚ.
fn interpolation_search(
    g: &BinaryForm,
    rank: u32,
    rng: &mut ChaCha8Rng,
) -> Option<(BinaryForm, Vec<(Rat, Rat)>, usize)> {
    let kernel = kernel_at(g, rank);
    let k = kernel.len();
    if k < 2 {
        return None;
    }
    let fixed = (k - 1).min(rank as usize - 1);
    for attempt in 1..=16 {
        let mut pts: Vec<Rat> = Vec::new();
        while pts.len() < fixed {
            let q = rat::ratio(rng.gen_range(-24..=24), rng.gen_range(1..=6));
            if !pts.contains(&q) {
                pts.push(q);
            }
        }
        let rows: Vec<Vec<Rat>> = pts
            .iter()
            .map(|t| {
                kernel
                    .iter()
                    .map(|v| BinaryForm::new(v.clone()).eval(t, &Rat::one()))
                    .collect()
            })
            .collect();
        let lambdas = if rows.is_empty() {
            vec![random_combination(&Mat::identity(k).row_vecs(), rng)]
        } else {
            Mat::from_rows(k, &rows).ok()?.kernel()
        };
        let Some(lambda) = lambdas.first() else { continue };
        let mut h = vec![Rat::zero(); rank as usize + 1];
        for (c, v) in lambda.iter().zip(&kernel) {
            rat::axpy(c, v, &mut h);
        }
        let h = normalized(h);
        if h.is_zero() {
            continue;
        }
        if let Some(roots) = rational_roots(&h) {
            return Some((h, roots, attempt));
        }
    }
    None
}

/// Rank certificate together with an explicit decomposition.
pub fn binary_decompose(g: &BinaryForm, seed: u64, precision: u32) -> Result<RankCertificate> {
    let mut cert = binary_rank(g, seed)?;
    if g.degree() == 0 {
        cert.decomposition = Some(Decomposition {
            terms: Terms::Exact(vec![ExactTerm {
                form: (Rat::one(), Rat::zero()),
                coef: g.coeffs()[0].clone(),
            }]),
            precision_bits: None,
            residual_bound: Rat::zero(),
        });
        return Ok(cert);
    }
    if let Some(roots) = rational_roots(&cert.witness) {
        cert.decomposition = Some(exact_decomposition(g, &roots)?);
        return Ok(cert);
    }
    // separate stream so the rank search above is unaffected
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x005e_ed0f_5eed);
    if let Some((h, roots, attempt)) = interpolation_search(g, cert.rank as u32, &mut rng) {
        cert.witness = h;
        cert.witness_source = WitnessSource::Interpolation { attempt };
        cert.decomposition = Some(exact_decomposition(g, &roots)?);
        return Ok(cert);
    }
    cert.decomposition = Some(decompose_with_witness(g, &cert.witness, precision)?);
    Ok(cert)
}

/// Expands an exact decomposition back into a binary form.
pub fn expand_exact(terms: &[ExactTerm], d: u32) -> BinaryForm {
    let mut acc = vec![Rat::zero(); d as usize + 1];
    for t in terms {
        let p = BinaryForm::linear_power(&t.form.0, &t.form.1, d);
        rat::axpy(&t.coef, p.coeffs(), &mut acc);
    }
    BinaryForm::new(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};
    use proptest::prelude::*;

    fn monomial(d: u32, j: usize) -> BinaryForm {
        let mut c = vec![0i64; d as usize + 1];
        c[j] = 1;
        BinaryForm::from_ints(&c)
    }

    #[test]
    fn powers_have_rank_one() {
        for d in 1..8 {
            let g = monomial(d, 0);
            let cert = binary_rank(&g, 0).unwrap();
            assert_eq!((cert.rank, cert.border_rank), (1, 1));
            assert_eq!(cert.witness, BinaryForm::from_ints(&[0, 1]));
        }
    }

    #[test]
    fn tangential_forms() {
        for d in 3..=10u32 {
            let g = monomial(d, 1);
            assert_eq!(binary_border_rank(&g).unwrap(), 2);
            let cert = binary_rank(&g, 0).unwrap();
            assert_eq!(cert.rank, d as usize);
            assert!(cert.witness.squarefree().unwrap());
            assert!(is_apolar(&g, &cert.witness));
            assert_eq!(cert.search.levels[0].outcome, LevelOutcome::NotSquarefree);
        }
    }

    #[test]
    fn monomial_ranks_follow_larger_exponent() {
        // x^a y^b with a ≥ b ≥ 1 has rank a + 1 and border rank b + 1
        for d in 2..9u32 {
            for b in 1..=(d / 2) as usize {
                let a = d as usize - b;
                let g = monomial(d, b);
                let cert = binary_rank(&g, 3).unwrap();
                assert_eq!(cert.rank, a + 1, "x^{a} y^{b}");
                assert_eq!(cert.border_rank, b + 1);
            }
        }
    }

    #[test]
    fn cubes_and_zero() {
        let g = BinaryForm::from_ints(&[1, 0, 0, 1]);
        assert_eq!(binary_border_rank(&g).unwrap(), 2);
        assert_eq!(binary_rank(&g, 0).unwrap().rank, 2);
        assert_eq!(binary_rank(&BinaryForm::from_ints(&[0, 0]), 0), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn exact_decomposition_of_cube() {
        let g = BinaryForm::linear_power(&rat(1), &rat(1), 3);
        let cert = binary_decompose(&g, 0, 128).unwrap();
        let dec = cert.decomposition.unwrap();
        let Terms::Exact(terms) = &dec.terms else { panic!("expected exact") };
        assert_eq!(terms, &vec![ExactTerm { form: (rat(1), rat(1)), coef: rat(1) }]);
    }

    #[test]
    fn xy_decomposes_over_q() {
        let g = BinaryForm::from_ints(&[0, 1, 0]);
        let h = BinaryForm::from_ints(&[1, 0, -1]);
        let dec = decompose_with_witness(&g, &h, 128).unwrap();
        let Terms::Exact(terms) = &dec.terms else { panic!("expected exact") };
        // ((x + y)² − (x − y)²)/4
        let mut got: Vec<(Rat, Rat, Rat)> =
            terms.iter().map(|t| (t.form.0.clone(), t.form.1.clone(), t.coef.clone())).collect();
        got.sort();
        assert_eq!(
            got,
            vec![(rat(-1), rat(1), ratio(-1, 4)), (rat(1), rat(1), ratio(1, 4))]
        );
    }

    #[test]
    fn sum_of_squares_is_exact() {
        let g = BinaryForm::from_ints(&[1, 0, 1]);
        let cert = binary_decompose(&g, 0, 128).unwrap();
        assert_eq!(cert.rank, 2);
        let dec = cert.decomposition.unwrap();
        assert!(dec.is_exact());
        let Terms::Exact(t) = &dec.terms else { unreachable!() };
        assert_eq!(expand_exact(t, 2), g);
    }

    #[test]
    fn irrational_and_complex_roots_use_numerics() {
        let threshold = Rat::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 30));
        // (x + √2 y)³ + (x − √2 y)³ and (x + i y)³ + (x − i y)³
        for (g, witness) in [
            (BinaryForm::from_ints(&[2, 0, 12, 0]), BinaryForm::from_ints(&[2, 0, -1])),
            (BinaryForm::from_ints(&[2, 0, -6, 0]), BinaryForm::from_ints(&[1, 0, 1])),
        ] {
            let cert = binary_decompose(&g, 0, 128).unwrap();
            assert_eq!(cert.rank, 2);
            assert_eq!(cert.witness, normalized(witness.coeffs().to_vec()));
            let dec = cert.decomposition.unwrap();
            assert!(!dec.is_exact());
            assert_eq!(dec.precision_bits, Some(128));
            assert!(dec.residual_bound < threshold);
            let Terms::Numeric(t) = &dec.terms else { unreachable!() };
            assert_eq!(numeric_residual(&g, t), dec.residual_bound);
        }
    }

    #[test]
    fn top_level_forms_decompose_exactly_by_interpolation() {
        for d in 3..=8u32 {
            let g = monomial(d, 1);
            let cert = binary_decompose(&g, 7, 128).unwrap();
            let dec = cert.decomposition.as_ref().unwrap();
            let Terms::Exact(t) = &dec.terms else { panic!("x^{}y not exact", d - 1) };
            assert_eq!(t.len(), d as usize);
            assert_eq!(expand_exact(t, d), g);
            assert!(is_apolar(&g, &cert.witness));
        }
    }

    #[test]
    fn rational_root_recovery() {
        let pts = [(rat(1), rat(0)), (ratio(-7, 3), rat(1)), (ratio(5, 2), rat(1)), (rat(0), rat(1))];
        let h = BinaryForm::vanishing_at(&pts);
        let roots = rational_roots(&h).unwrap();
        assert_eq!(roots.len(), 4);
        for p in &pts {
            assert!(roots.contains(p));
        }
        assert_eq!(rational_roots(&BinaryForm::from_ints(&[1, 0, -2])), None);
    }

    fn generic_sum(forms: &[(i64, i64)], coefs: &[i64], d: u32) -> BinaryForm {
        let mut acc = vec![rat(0); d as usize + 1];
        for ((a, b), c) in forms.iter().zip(coefs) {
            let p = BinaryForm::linear_power(&rat(*a), &rat(*b), d);
            rat::axpy(&rat(*c), p.coeffs(), &mut acc);
        }
        BinaryForm::new(acc)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_invariant_under_substitution(
            coeffs in proptest::collection::vec(-4i64..5, 4..8),
            m in proptest::collection::vec(-3i64..4, 4),
            seed in 0u64..4,
        ) {
            let g = BinaryForm::from_ints(&coeffs);
            prop_assume!(!g.is_zero());
            prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
            let p = BinaryForm::from_ints(&[m[0], m[1]]);
            let q = BinaryForm::from_ints(&[m[2], m[3]]);
            let h = g.substitute(&p, &q).unwrap();
            let a = binary_rank(&g, seed).unwrap();
            let b = binary_rank(&h, seed).unwrap();
            prop_assert_eq!(a.rank, b.rank);
            prop_assert_eq!(a.border_rank, b.border_rank);
            prop_assert!(a.border_rank <= a.rank);
            prop_assert!(a.rank <= g.degree().max(1) as usize);
        }

        #[test]
        fn planted_sums_recover_rank(
            raw in proptest::collection::btree_set(-9i64..10, 1..4),
            coefs in proptest::collection::vec(1i64..6, 3),
            d in 6u32..9,
        ) {
            // distinct points (t : 1); r ≤ d/2 so the decomposition is the
            // unique minimal one
            let forms: Vec<(i64, i64)> = raw.iter().map(|&t| (t, 1)).collect();
            let g = generic_sum(&forms, &coefs, d);
            let cert = binary_decompose(&g, 0, 128).unwrap();
            prop_assert_eq!(cert.rank, forms.len());
            prop_assert_eq!(cert.border_rank, forms.len());
            let dec = cert.decomposition.unwrap();
            let Terms::Exact(t) = &dec.terms else { panic!("rational roots expected") };
            prop_assert_eq!(expand_exact(t, d), g);
        }

        #[test]
        fn exact_decompositions_reproduce_input(
            coeffs in proptest::collection::vec(-5i64..6, 3..7), seed in 0u64..3,
        ) {
            let g = BinaryForm::from_ints(&coeffs);
            prop_assume!(!g.is_zero());
            let cert = binary_decompose(&g, seed, 128).unwrap();
            let dec = cert.decomposition.unwrap();
            prop_assert_eq!(dec.len(), cert.rank);
            match &dec.terms {
                Terms::Exact(t) => prop_assert_eq!(expand_exact(t, g.degree()), g),
                Terms::Numeric(_) => prop_assert!(dec.residual_bound <= residual_threshold(&g, 128)),
            }
        }
    }
}
