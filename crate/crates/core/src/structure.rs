//! Instance verifiers for the splitting of minimal decompositions.
//!
//! Each verifier takes concrete schemes and a point `P` (Veronese
//! coordinates), checks the hypotheses exactly, and evaluates every
//! conclusion as a named check. Hypothesis failures are reported as
//! [`Error::Precondition`] with a stable name; failed conclusions are reported
//! as data, never as errors.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{self, BinaryForm, HomogPoly};
use crate::rat::{self, Rat};
use crate::scheme::{self, CurvComponent, Line, ProjPoint, Scheme};
use crate::sylvester;

/// A named boolean conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

fn require(cond: bool, name: &'static str, detail: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::precondition(name, detail))
    }
}

fn check_point(p: &[Rat], m: usize, d: u32) -> Result<()> {
    let n = poly::monomial_count(m + 1, d);
    if p.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.len(),
        });
    }
    if rat::is_zero_vec(p) {
        return Err(Error::ZeroPoint);
    }
    Ok(())
}

/// Span membership plus minimality, each as a separate named precondition.
fn require_minimal(
    p: &[Rat],
    w: &Scheme,
    d: u32,
    span_name: &'static str,
    minimal_name: &'static str,
) -> Result<()> {
    match scheme::minimal_for(p, w, d) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Error::precondition(
            minimal_name,
            "P lies in the span of a proper subscheme",
        )),
        Err(Error::NotInSpan) => Err(Error::precondition(span_name, "P is not in the span")),
        Err(e) => Err(e),
    }
}

fn representable_union(a: &Scheme, b: &Scheme) -> Result<Scheme> {
    a.union(b).map_err(|e| match e {
        Error::UnrepresentableUnion => Error::precondition(
            "union_representable",
            "the union is not curvilinear at a shared support",
        ),
        other => other,
    })
}

/// Span defect of `A ∪ B` under `ν_d` for two distinct schemes that both
/// minimally span `P`. The result is positive whenever the hypotheses hold.
pub fn joint_dependence(a: &Scheme, b: &Scheme, p: &[Rat], d: u32) -> Result<usize> {
    check_point(p, a.m(), d)?;
    require(a != b, "distinct_schemes", "A and B coincide")?;
    require_minimal(p, a, d, "p_in_span_a", "minimal_a")?;
    require_minimal(p, b, d, "p_in_span_b", "minimal_b")?;
    let union = representable_union(a, b)?;
    let common = a.intersection(b)?;
    debug_assert_eq!(union.degree(), a.degree() + b.degree() - common.degree());
    Ok(union.defect(d))
}

/// Outcome of the special-line search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialLine {
    pub line: Line,
    /// `deg(W ∩ ℓ)`.
    pub degree: usize,
    pub h1: usize,
    /// Number of distinct candidate lines examined.
    pub candidates: usize,
    /// Candidate lines with intersection degree at least `x + 2`.
    pub heavy_lines: usize,
}

impl SpecialLine {
    pub fn formula_holds(&self, x: u32) -> bool {
        self.degree == x as usize + 1 + self.h1
    }

    pub fn unique(&self) -> bool {
        self.heavy_lines == 1
    }
}

/// Lines through two supports, and lines through a support along its first
/// jet direction. Every line meeting `W` in degree at least 2 is among them.
pub fn candidate_lines(w: &Scheme) -> Vec<Line> {
    let mut set = BTreeSet::new();
    let comps = w.components();
    for (i, a) in comps.iter().enumerate() {
        if let Some(v) = a.jets().first() {
            if let Ok(l) = Line::new(a.support().coords(), v) {
                set.insert(l);
            }
        }
        for b in &comps[i + 1..] {
            if let Ok(l) = Line::through(a.support(), b.support()) {
                set.insert(l);
            }
        }
    }
    set.into_iter().collect()
}

/// The line `ℓ` with `deg(W ∩ ℓ) ≥ x + 2` for a scheme with
/// `deg W ≤ 2x + 1` and positive span defect in degree `x`.
pub fn find_special_line(w: &Scheme, x: u32) -> Result<SpecialLine> {
    require(
        w.degree() <= 2 * x as usize + 1,
        "degree_bound",
        format!("deg W = {} exceeds 2x+1 = {}", w.degree(), 2 * x + 1),
    )?;
    let h1 = w.defect(x);
    require(h1 > 0, "no_special_line", "h1=0")?;
    let lines = if w.m() == 1 {
        let e = |i: usize| {
            let mut v = alloc::vec![Rat::from_integer(0.into()); 2];
            v[i] = Rat::from_integer(1.into());
            v
        };
        alloc::vec![Line::new(&e(0), &e(1))?]
    } else {
        candidate_lines(w)
    };
    let scored: Vec<(usize, Line)> = lines
        .iter()
        .map(|l| (scheme::line_intersection_degree(w, l), l.clone()))
        .collect();
    let heavy: Vec<&(usize, Line)> = scored
        .iter()
        .filter(|(deg, _)| *deg >= x as usize + 2)
        .collect();
    let (degree, line) = heavy
        .iter()
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)))
        .map(|(deg, l)| (*deg, l.clone()))
        .ok_or_else(|| Error::Invalid("no candidate line meets W in degree x+2".into()))?;
    Ok(SpecialLine {
        line,
        degree,
        h1,
        candidates: scored.len(),
        heavy_lines: heavy.len(),
    })
}

/// Data of a successful split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCertificate {
    pub line: Line,
    pub s1: Scheme,
    pub s2: Scheme,
    pub z1: Scheme,
    pub h1: usize,
    pub line_degree: usize,
    pub deg_z: usize,
    pub card_s: usize,
    /// `t = #S₂`.
    pub t: usize,
    /// Binary part `Q ∈ ⟨ν_d(ℓ)⟩` in Veronese coordinates.
    pub binary_part: Vec<Rat>,
    /// `Q` as a binary form of degree `d` in the line's parameters.
    pub binary_form: BinaryForm,
    pub binary_rank: usize,
    pub binary_border_rank: usize,
    pub checks: Vec<Check>,
    /// Hypotheses taken on trust.
    pub assumptions: Vec<&'static str>,
}

/// A failed conclusion; under the hypotheses this can only come from a false
/// assumption (for instance `S` not computing the rank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub line: Option<Line>,
    pub h1: usize,
    pub checks: Vec<Check>,
    pub failed: Vec<&'static str>,
    pub assumptions: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitOutcome {
    Certified(SplitCertificate),
    Counterexample(CounterexampleReport),
}

pub const SPLIT_ASSUMPTIONS: [&str; 2] = [
    "s_computes_symmetric_rank",
    "z_computes_symmetric_border_rank",
];

/// Verifies the split `S = S₁ ⊔ S₂`, `Z = Z₁ ⊔ S₂` along the special line of
/// `S ∪ Z`, with `S` reduced, `Z` non-reduced, `#S > deg Z`,
/// `#S + deg Z ≤ 2d + 1`, and `P` minimally spanned by both.
pub fn split_theorem(s: &Scheme, z: &Scheme, p: &[Rat], d: u32, seed: u64) -> Result<SplitOutcome> {
    if s.m() != z.m() {
        return Err(Error::DimensionMismatch {
            expected: s.m() + 1,
            found: z.m() + 1,
        });
    }
    check_point(p, s.m(), d)?;
    require(s.is_reduced(), "s_reduced", "S must be a reduced set of points")?;
    require(
        s.degree() > z.degree(),
        "rank_exceeds_border_rank",
        format!("#S = {} is not larger than deg Z = {}", s.degree(), z.degree()),
    )?;
    let sum = s.degree() + z.degree();
    let bound = 2 * d as usize + 1;
    if sum > bound {
        let detail = if sum == bound + 1 {
            format!("#S + deg Z = {sum} = 2d+2; the bound 2d+1 is sharp there")
        } else {
            format!("#S + deg Z = {sum} exceeds 2d+1 = {bound}")
        };
        return Err(Error::precondition("sum_at_most_2d_plus_1", detail));
    }
    require(!z.is_reduced(), "z_nonreduced", "Z must have a non-reduced component")?;
    require_minimal(p, s, d, "p_in_span_s", "minimal_s")?;
    require_minimal(p, z, d, "p_in_span_z", "minimal_z")?;
    let w = representable_union(s, z)?;

    let assumptions = SPLIT_ASSUMPTIONS.to_vec();
    let mut checks = Vec::new();
    let h1 = w.defect(d);
    checks.push(Check {
        name: "split.h1_positive",
        passed: h1 > 0,
    });
    let special = match find_special_line(&w, d) {
        Ok(sl) => sl,
        Err(_) => {
            let failed = checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
            return Ok(SplitOutcome::Counterexample(CounterexampleReport {
                line: None,
                h1,
                checks,
                failed,
                assumptions,
            }));
        }
    };
    let line = special.line.clone();
    checks.push(Check {
        name: "split.line_meets_w_in_degree_d_plus_2",
        passed: special.degree >= d as usize + 2,
    });
    checks.push(Check {
        name: "split.line_degree_formula",
        passed: special.formula_holds(d),
    });
    checks.push(Check {
        name: "split.line_unique",
        passed: special.unique(),
    });

    let s_points = s.points()?;
    let (on, off): (Vec<ProjPoint>, Vec<ProjPoint>) =
        s_points.iter().cloned().partition(|q| line.contains(q));
    let s1 = Scheme::reduced(s.m(), on)?;
    let s2_pts: Vec<ProjPoint> = off
        .iter()
        .filter(|q| z.component_at(q).is_some())
        .cloned()
        .collect();
    let s3 = off.len() - s2_pts.len();
    let s2 = Scheme::reduced(s.m(), s2_pts.clone())?;
    let z1 = z.intersect_with_line(&line);

    checks.push(Check {
        name: "split.s_is_s1_plus_s2",
        passed: s3 == 0,
    });
    let far = z
        .components()
        .iter()
        .filter(|c| c.line_intersection_degree(&line) == 0 && s2.component_at(c.support()).is_none())
        .count();
    checks.push(Check {
        name: "split.no_far_components_of_z",
        passed: far == 0,
    });
    checks.push(Check {
        name: "split.s2_components_of_z",
        passed: s2_pts
            .iter()
            .all(|q| z.component_at(q).is_some_and(CurvComponent::is_reduced)),
    });
    checks.push(Check {
        name: "split.z_components_on_line_lie_in_line",
        passed: z.components().iter().all(|c| {
            let e = c.line_intersection_degree(&line);
            e == 0 || e == c.length()
        }),
    });
    let rebuilt = z1.union(&s2).ok();
    checks.push(Check {
        name: "split.z_is_z1_plus_s2",
        passed: rebuilt.as_ref() == Some(z),
    });
    let t = s2.degree();
    checks.push(Check {
        name: "split.degrees_add_up",
        passed: z.degree() == z1.degree() + t && s.degree() == s1.degree() + t,
    });
    checks.push(Check {
        name: "split.t_bound",
        passed: t + d as usize + 2 <= sum,
    });

    // binary part: P = Q + Σ c_q ν_d(q) over q ∈ S₂ with Q ∈ ⟨ν_d(S₁)⟩
    let s1_vecs = s1.span_vectors(d);
    let s2_vecs = s2.span_vectors(d);
    let mut basis = s1_vecs.clone();
    basis.extend(s2_vecs.iter().cloned());
    let coords = linalg::coordinates_in(&basis, p)?.ok_or(Error::NotInSpan)?;
    let mut q = alloc::vec![Rat::from_integer(0.into()); p.len()];
    for (c, v) in coords.iter().zip(&s1_vecs) {
        rat::axpy(c, v, &mut q);
    }
    let q_in_z1 = !z1.is_empty() && scheme::in_scheme_span(&q, &z1, d)?;
    checks.push(Check {
        name: "split.binary_part_in_z1_span",
        passed: q_in_z1,
    });
    let binary_form = poly::curve_point_to_binary(&q, d, &line.parametrization())?;
    checks.push(Check {
        name: "split.binary_part_nonzero",
        passed: !binary_form.is_zero(),
    });
    let (binary_rank, binary_border_rank) = if binary_form.is_zero() {
        (0, 0)
    } else {
        let cert = sylvester::binary_rank(&binary_form, seed)?;
        (cert.rank, cert.border_rank)
    };
    checks.push(Check {
        name: "split.binary_rank_is_card_s1",
        passed: binary_rank == s1.degree(),
    });
    checks.push(Check {
        name: "split.binary_border_rank_is_deg_z1",
        passed: binary_border_rank == z1.degree(),
    });

    let failed: Vec<&'static str> = checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    if !failed.is_empty() {
        return Ok(SplitOutcome::Counterexample(CounterexampleReport {
            line: Some(line),
            h1,
            checks,
            failed,
            assumptions,
        }));
    }
    Ok(SplitOutcome::Certified(SplitCertificate {
        line,
        s1,
        s2,
        z1,
        h1,
        line_degree: special.degree,
        deg_z: z.degree(),
        card_s: s.degree(),
        t,
        binary_part: q,
        binary_form,
        binary_rank,
        binary_border_rank,
        checks,
        assumptions,
    }))
}

/// Result of the equal-degree line search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DdLine {
    pub line: Line,
    /// `deg(ℓ ∩ A)`.
    pub degree_with_a: usize,
    /// `2·deg(ℓ ∩ A) ≥ d + 2`.
    pub bound_met: bool,
}

/// For two distinct degree-`ρ` schemes (`ρ ≤ d`, one of them reduced) both
/// minimally spanning `P`, finds the line carrying at least `(d+2)/2` of `A`.
pub fn lemma_dd_line(a: &Scheme, b: &Scheme, p: &[Rat], d: u32) -> Result<DdLine> {
    check_point(p, a.m(), d)?;
    require(
        a.degree() == b.degree(),
        "equal_degrees",
        format!("deg A = {} but deg B = {}", a.degree(), b.degree()),
    )?;
    require(
        a.degree() <= d as usize,
        "rho_at_most_d",
        format!("rho = {} exceeds d = {d}", a.degree()),
    )?;
    require(a != b, "distinct_schemes", "A and B coincide")?;
    require(
        a.is_reduced() || b.is_reduced(),
        "one_reduced",
        "neither scheme is reduced",
    )?;
    require_minimal(p, a, d, "p_in_span_a", "minimal_a")?;
    require_minimal(p, b, d, "p_in_span_b", "minimal_b")?;
    let w = representable_union(a, b)?;
    let special = find_special_line(&w, d)?;
    let degree_with_a = scheme::line_intersection_degree(a, &special.line);
    Ok(DdLine {
        line: special.line,
        degree_with_a,
        bound_met: 2 * degree_with_a >= d as usize + 2,
    })
}

/// How the lower bound `sbr(P) ≥ ρ` is established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerBound {
    /// Some catalecticant has rank at least `ρ`.
    Verified { catalecticant_rank: usize },
    /// The catalecticant bound falls short; the bound rests on the theorem.
    Trusted { catalecticant_rank: usize },
}

/// What the uniqueness statement was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniquenessScope {
    /// The level-`level` apolar forms of `P` are exactly the degree-`level`
    /// forms through `B`, and they cut out `B`: every scheme of degree at
    /// most `ρ` spanning `P` equals `B`.
    AllSchemes { level: u32 },
    /// Only the named finite family was excluded: proper subsets of `B` and
    /// schemes of degree at most `ρ` supported on proper subsets of `B`.
    Family { subsets_checked: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessCertificate {
    pub rho: usize,
    pub d: u32,
    pub max_collinear: usize,
    pub lower_bound: LowerBound,
    pub uniqueness: UniquenessScope,
    pub checks: Vec<Check>,
}

impl UniquenessCertificate {
    pub fn lower_bound_verified(&self) -> bool {
        matches!(self.lower_bound, LowerBound::Verified { .. })
    }
}

/// Spanning vectors of `⟨ν_d(Spec O_p/m_p^len)⟩`: the points of the forms
/// `(p·x)^{d−len+1}·G` with `deg G = len − 1`. Every curvilinear scheme of
/// length at most `len` supported at `p` lies in this fat point.
pub fn fat_point_span(p: &ProjPoint, len: u32, d: u32) -> Result<Vec<Vec<Rat>>> {
    let m = p.m();
    if len == 0 {
        return Ok(Vec::new());
    }
    if len > d + 1 {
        return linalg::span_basis(
            &linalg_identity(poly::monomial_count(m + 1, d)),
            poly::monomial_count(m + 1, d),
        );
    }
    let base = HomogPoly::linear_power(p.coords(), d + 1 - len)?;
    let mut out = Vec::new();
    for g in poly::monomials(m + 1, len - 1) {
        let mono = HomogPoly::from_terms(m, len - 1, [(g, Rat::from_integer(1.into()))])?;
        out.push(base.mul(&mono)?.to_point());
    }
    Ok(out)
}

fn linalg_identity(n: usize) -> Vec<Vec<Rat>> {
    crate::linalg::Mat::identity(n).row_vecs()
}

/// Smallest level `a` such that the level-`a` apolar forms of `P` are
/// exactly the forms through `B` and `B` is cut out by them.
fn apolar_uniqueness_level(f: &HomogPoly, b: &Scheme, d: u32) -> Result<Option<u32>> {
    let rho = b.degree();
    for a in 1..d {
        if f.catalecticant(a)?.rank() != rho {
            continue;
        }
        // forms of degree a through B have codimension ρ, and B is cut out
        // by them once it is independent in degree a − 1
        if b.defect(a) != 0 || b.defect(a - 1) != 0 {
            continue;
        }
        let kernel = f.catalecticant(a)?.kernel();
        let pts = b.points()?;
        let vanish = kernel.iter().all(|h| {
            pts.iter()
                .all(|q| rat::dot(h, &scheme::veronese(q, a)).numer().sign() == num_bigint::Sign::NoSign)
        });
        if vanish {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Certifies `sr(P) = sbr(P) = ρ` and uniqueness of `B` for a reduced `B`
/// with `ρ = #B ≤ d`, `d ≥ 5`, no `⌊(d+1)/2⌋` collinear points, and `P`
/// minimally spanned by `ν_d(B)`.
pub fn theorem_oo_certify(b: &Scheme, p: &[Rat], d: u32) -> Result<UniquenessCertificate> {
    check_point(p, b.m(), d)?;
    require(d >= 5, "degree_at_least_5", format!("d = {d} < 5"))?;
    require(b.is_reduced(), "b_reduced", "B must be a reduced set of points")?;
    let rho = b.degree();
    require(rho <= d as usize, "rho_at_most_d", format!("rho = {rho} exceeds d = {d}"))?;
    let mc = scheme::max_collinear(b)?;
    let threshold = (d as usize).div_ceil(2);
    require(
        mc < threshold,
        "no_collinear_subset",
        format!("{mc} collinear points, threshold floor((d+1)/2) = {threshold}"),
    )?;
    require_minimal(p, b, d, "p_in_span", "p_minimal")?;

    let f = HomogPoly::from_point(b.m(), d, p)?;
    let cat = f.cat_lower_bound()?;
    let lower_bound = if cat >= rho {
        LowerBound::Verified {
            catalecticant_rank: cat,
        }
    } else {
        LowerBound::Trusted {
            catalecticant_rank: cat,
        }
    };
    let mut checks = alloc::vec![
        Check {
            name: "unique.upper_bound_from_b",
            passed: true,
        },
        Check {
            name: "unique.catalecticant_reaches_rho",
            passed: cat >= rho,
        },
    ];

    let uniqueness = if let Some(level) = apolar_uniqueness_level(&f, b, d)? {
        checks.push(Check {
            name: "unique.apolar_forms_cut_out_b",
            passed: true,
        });
        UniquenessScope::AllSchemes { level }
    } else {
        let pts = b.points()?;
        let mut checked = 0;
        let mut all_clear = true;
        for mask in 1u64..(1u64 << rho) - 1 {
            let subset: Vec<&ProjPoint> = (0..rho)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &pts[i])
                .collect();
            let len = (rho - subset.len() + 1) as u32;
            let mut vecs = Vec::new();
            for q in subset {
                vecs.extend(fat_point_span(q, len, d)?);
            }
            checked += 1;
            if linalg::in_span(&vecs, p)? {
                all_clear = false;
            }
        }
        checks.push(Check {
            name: "unique.family_excluded",
            passed: all_clear,
        });
        UniquenessScope::Family {
            subsets_checked: checked,
        }
    };
    Ok(UniquenessCertificate {
        rho,
        d,
        max_collinear: mc,
        lower_bound,
        uniqueness,
        checks,
    })
}
