//! JSON wire formats. Rationals travel as strings `"p"` or `"p/q"`; every
//! output object starts with a `kind` field and keeps a fixed field order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use waring_core::constructions::{Claim, ExampleBundle, ProbeRow, SplitInstance};
use waring_core::numeric::CRat;
use waring_core::poly::{self, BinaryForm, HomogPoly};
use waring_core::rat::{fmt_rat, parse_rat};
use waring_core::structure::{
    Check, CounterexampleReport, DdLine, LowerBound, SpecialLine, SplitCertificate,
    UniquenessCertificate, UniquenessScope,
};
use waring_core::sylvester::{
    Decomposition, LevelOutcome, RankCertificate, SearchTrace, Terms, WitnessSource,
};
use waring_core::{CurvComponent, Error, Line, Rat, Scheme};

pub fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}

pub fn parse_rats(v: &[String]) -> Result<Vec<Rat>, Error> {
    v.iter().map(|s| parse_rat(s)).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

/// `{"m", "d", "terms": [{"exp", "coef"}]}`; exponents sum to `d`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub m: usize,
    pub d: u32,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &HomogPoly) -> Self {
        PolyJson {
            m: p.m(),
            d: p.degree(),
            terms: p
                .terms()
                .into_iter()
                .map(|(exp, c)| TermJson {
                    exp,
                    coef: fmt_rat(&c),
                })
                .collect(),
        }
    }

    pub fn from_binary(g: &BinaryForm) -> Self {
        Self::from_poly(&g.to_homog())
    }

    pub fn to_poly(&self) -> Result<HomogPoly, Error> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), parse_rat(&t.coef)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        HomogPoly::from_terms(self.m, self.d, terms)
    }

    pub fn to_binary(&self) -> Result<BinaryForm, Error> {
        if self.m != 1 {
            return Err(Error::Invalid(format!(
                "binary form expected (m = 1), found m = {}",
                self.m
            )));
        }
        BinaryForm::from_homog(&self.to_poly()?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub point: Vec<String>,
    #[serde(default)]
    pub jets: Vec<Vec<String>>,
}

/// `{"m", "components": [{"point", "jets"}]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SchemeJson {
    pub m: usize,
    pub components: Vec<ComponentJson>,
}

impl SchemeJson {
    pub fn from_scheme(s: &Scheme) -> Self {
        SchemeJson {
            m: s.m(),
            components: s
                .components()
                .iter()
                .map(|c| ComponentJson {
                    point: rats(c.support().coords()),
                    jets: c.jets().iter().map(|v| rats(v)).collect(),
                })
                .collect(),
        }
    }

    pub fn to_scheme(&self) -> Result<Scheme, Error> {
        let comps = self
            .components
            .iter()
            .map(|c| {
                let point = parse_rats(&c.point)?;
                if point.len() != self.m + 1 {
                    return Err(Error::DimensionMismatch {
                        expected: self.m + 1,
                        found: point.len(),
                    });
                }
                let jets = c
                    .jets
                    .iter()
                    .map(|j| parse_rats(j))
                    .collect::<Result<Vec<_>, Error>>()?;
                CurvComponent::new(point, jets)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Scheme::new(self.m, comps)
    }
}

/// Input for the verifiers: a point, named schemes, optionally the degree.
/// Bundles and split instances are accepted as they are.
#[derive(Debug, Clone, Deserialize)]
pub struct InstanceJson {
    #[serde(default)]
    pub d: Option<u32>,
    pub point: Vec<String>,
    pub schemes: BTreeMap<String, SchemeJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LineJson {
    /// Reduced echelon basis of the 2-dimensional linear span.
    pub basis: [Vec<String>; 2],
    /// Basis of the linear forms vanishing on the line.
    pub equations: Vec<Vec<String>>,
}

impl LineJson {
    pub fn from_line(l: &Line) -> Self {
        let b = l.basis();
        LineJson {
            basis: [rats(&b[0]), rats(&b[1])],
            equations: l.defining_forms().iter().map(|v| rats(v)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub name: &'static str,
    pub passed: bool,
}

pub fn checks(cs: &[Check]) -> Vec<CheckJson> {
    cs.iter()
        .map(|c| CheckJson {
            name: c.name,
            passed: c.passed,
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Rejection {
    pub kind: &'static str,
    pub reason: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SourceJson {
    BasisVector { index: usize },
    RandomCombination { attempt: usize },
    Interpolation { attempt: usize },
    Given,
}

impl SourceJson {
    fn from_source(s: &WitnessSource) -> Self {
        match s {
            WitnessSource::BasisVector(i) => SourceJson::BasisVector { index: *i },
            WitnessSource::RandomCombination(a) => SourceJson::RandomCombination { attempt: *a },
            WitnessSource::Interpolation { attempt } => SourceJson::Interpolation { attempt: *attempt },
            WitnessSource::Given => SourceJson::Given,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelJson {
    pub level: usize,
    pub kernel_dim: usize,
    pub samples: usize,
    pub outcome: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchJson {
    pub seed: u64,
    pub escalation_bound: usize,
    pub levels: Vec<LevelJson>,
}

impl SearchJson {
    fn from_trace(t: &SearchTrace) -> Self {
        SearchJson {
            seed: t.seed,
            escalation_bound: t.escalation_bound,
            levels: t
                .levels
                .iter()
                .map(|l| LevelJson {
                    level: l.level,
                    kernel_dim: l.kernel_dim,
                    samples: l.samples,
                    outcome: match l.outcome {
                        LevelOutcome::EmptyKernel => "empty_kernel",
                        LevelOutcome::NotSquarefree => "not_squarefree",
                        LevelOutcome::Exhausted => "exhausted",
                        LevelOutcome::Found(_) => "found",
                    },
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RankJson {
    pub kind: &'static str,
    pub degree: u32,
    pub rank: usize,
    pub border_rank: usize,
    pub witness: PolyJson,
    pub witness_source: SourceJson,
    pub search: SearchJson,
}

impl RankJson {
    pub fn from_cert(g: &BinaryForm, c: &RankCertificate) -> Self {
        RankJson {
            kind: "binary_rank",
            degree: g.degree(),
            rank: c.rank,
            border_rank: c.border_rank,
            witness: PolyJson::from_binary(&c.witness),
            witness_source: SourceJson::from_source(&c.witness_source),
            search: SearchJson::from_trace(&c.search),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BorderRankJson {
    pub kind: &'static str,
    pub degree: u32,
    pub border_rank: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexJson {
    pub re: String,
    pub im: String,
}

impl ComplexJson {
    fn from_c(c: &CRat) -> Self {
        ComplexJson {
            re: fmt_rat(&c.re),
            im: fmt_rat(&c.im),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum TermOut {
    Exact {
        form: [String; 2],
        coef: String,
    },
    Numeric {
        form: [ComplexJson; 2],
        coef: ComplexJson,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionJson {
    pub kind: &'static str,
    pub degree: u32,
    pub rank: usize,
    pub border_rank: usize,
    pub exact: bool,
    /// `coef · (a x + b y)^d` for `form = [a, b]`.
    pub terms: Vec<TermOut>,
    pub precision_bits: Option<u32>,
    pub residual_bound: String,
    pub witness: PolyJson,
    pub witness_source: SourceJson,
    pub search: SearchJson,
}

impl DecompositionJson {
    pub fn from_cert(g: &BinaryForm, c: &RankCertificate, dec: &Decomposition) -> Self {
        let terms = match &dec.terms {
            Terms::Exact(ts) => ts
                .iter()
                .map(|t| TermOut::Exact {
                    form: [fmt_rat(&t.form.0), fmt_rat(&t.form.1)],
                    coef: fmt_rat(&t.coef),
                })
                .collect(),
            Terms::Numeric(ts) => ts
                .iter()
                .map(|t| TermOut::Numeric {
                    form: [ComplexJson::from_c(&t.form.0), ComplexJson::from_c(&t.form.1)],
                    coef: ComplexJson::from_c(&t.coef),
                })
                .collect(),
        };
        DecompositionJson {
            kind: "binary_decomposition",
            degree: g.degree(),
            rank: c.rank,
            border_rank: c.border_rank,
            exact: dec.is_exact(),
            terms,
            precision_bits: dec.precision_bits,
            residual_bound: fmt_rat(&dec.residual_bound),
            witness: PolyJson::from_binary(&c.witness),
            witness_source: SourceJson::from_source(&c.witness_source),
            search: SearchJson::from_trace(&c.search),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatLevelJson {
    pub level: u32,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalecticantJson {
    pub kind: &'static str,
    pub m: usize,
    pub d: u32,
    pub levels: Vec<CatLevelJson>,
    pub lower_bound: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct H1Json {
    pub kind: &'static str,
    pub x: u32,
    pub degree: usize,
    pub span_dim: usize,
    pub h1: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecialLineJson {
    pub kind: &'static str,
    pub x: u32,
    pub line: LineJson,
    pub degree: usize,
    pub h1: usize,
    pub candidates: usize,
    pub heavy_lines: usize,
    pub unique: bool,
    pub formula_holds: bool,
}

impl SpecialLineJson {
    pub fn from_result(x: u32, s: &SpecialLine) -> Self {
        SpecialLineJson {
            kind: "special_line",
            x,
            line: LineJson::from_line(&s.line),
            degree: s.degree,
            h1: s.h1,
            candidates: s.candidates,
            heavy_lines: s.heavy_lines,
            unique: s.unique(),
            formula_holds: s.formula_holds(x),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitJson {
    pub kind: &'static str,
    pub status: &'static str,
    pub d: u32,
    pub line: LineJson,
    #[serde(rename = "S1")]
    pub s1: SchemeJson,
    #[serde(rename = "S2")]
    pub s2: SchemeJson,
    #[serde(rename = "Z1")]
    pub z1: SchemeJson,
    pub h1: usize,
    pub line_degree: usize,
    #[serde(rename = "deg_Z")]
    pub deg_z: usize,
    #[serde(rename = "card_S")]
    pub card_s: usize,
    pub t: usize,
    pub binary_part: Vec<String>,
    pub binary_form: PolyJson,
    pub binary_rank: usize,
    pub binary_border_rank: usize,
    pub checks: Vec<CheckJson>,
    pub assumptions: Vec<&'static str>,
}

impl SplitJson {
    pub fn from_cert(d: u32, c: &SplitCertificate) -> Self {
        SplitJson {
            kind: "split",
            status: "certified",
            d,
            line: LineJson::from_line(&c.line),
            s1: SchemeJson::from_scheme(&c.s1),
            s2: SchemeJson::from_scheme(&c.s2),
            z1: SchemeJson::from_scheme(&c.z1),
            h1: c.h1,
            line_degree: c.line_degree,
            deg_z: c.deg_z,
            card_s: c.card_s,
            t: c.t,
            binary_part: rats(&c.binary_part),
            binary_form: PolyJson::from_binary(&c.binary_form),
            binary_rank: c.binary_rank,
            binary_border_rank: c.binary_border_rank,
            checks: checks(&c.checks),
            assumptions: c.assumptions.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleJson {
    pub kind: &'static str,
    pub status: &'static str,
    pub d: u32,
    pub line: Option<LineJson>,
    pub h1: usize,
    pub checks: Vec<CheckJson>,
    pub failed: Vec<&'static str>,
    pub assumptions: Vec<&'static str>,
}

impl CounterexampleJson {
    pub fn from_report(d: u32, r: &CounterexampleReport) -> Self {
        CounterexampleJson {
            kind: "split",
            status: "counterexample",
            d,
            line: r.line.as_ref().map(LineJson::from_line),
            h1: r.h1,
            checks: checks(&r.checks),
            failed: r.failed.clone(),
            assumptions: r.assumptions.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DdLineJson {
    pub kind: &'static str,
    pub d: u32,
    pub line: LineJson,
    pub degree_with_a: usize,
    pub bound_met: bool,
}

impl DdLineJson {
    pub fn from_result(d: u32, r: &DdLine) -> Self {
        DdLineJson {
            kind: "lemma_dd",
            d,
            line: LineJson::from_line(&r.line),
            degree_with_a: r.degree_with_a,
            bound_met: r.bound_met,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerBoundJson {
    pub status: &'static str,
    pub catalecticant_rank: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "scope", rename_all = "snake_case")]
pub enum ScopeJson {
    AllSchemes { level: u32 },
    Family { subsets_checked: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct UniquenessJson {
    pub kind: &'static str,
    pub d: u32,
    pub rho: usize,
    pub max_collinear: usize,
    pub symmetric_rank: usize,
    pub symmetric_border_rank: usize,
    pub lower_bound: LowerBoundJson,
    pub uniqueness: ScopeJson,
    pub checks: Vec<CheckJson>,
}

impl UniquenessJson {
    pub fn from_cert(c: &UniquenessCertificate) -> Self {
        let lower_bound = match c.lower_bound {
            LowerBound::Verified { catalecticant_rank } => LowerBoundJson {
                status: "verified",
                catalecticant_rank,
            },
            LowerBound::Trusted { catalecticant_rank } => LowerBoundJson {
                status: "trusted",
                catalecticant_rank,
            },
        };
        let uniqueness = match c.uniqueness {
            UniquenessScope::AllSchemes { level } => ScopeJson::AllSchemes { level },
            UniquenessScope::Family { subsets_checked } => ScopeJson::Family { subsets_checked },
        };
        UniquenessJson {
            kind: "uniqueness",
            d: c.d,
            rho: c.rho,
            max_collinear: c.max_collinear,
            symmetric_rank: c.rho,
            symmetric_border_rank: c.rho,
            lower_bound,
            uniqueness,
            checks: checks(&c.checks),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum ClaimJson {
    Exactly(usize),
    AtMost { at_most: usize },
    AtLeast { at_least: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct BundleJson {
    pub kind: &'static str,
    pub construction: &'static str,
    pub d: u32,
    pub seed: u64,
    pub form: PolyJson,
    pub point: Vec<String>,
    pub schemes: BTreeMap<String, SchemeJson>,
    pub claims: BTreeMap<String, ClaimJson>,
    pub observed: BTreeMap<String, usize>,
    pub violated: Vec<String>,
    pub trusted: Vec<&'static str>,
}

impl BundleJson {
    pub fn from_bundle(b: &ExampleBundle) -> Self {
        BundleJson {
            kind: "bundle",
            construction: b.construction,
            d: b.d,
            seed: b.seed,
            form: PolyJson::from_poly(&b.form),
            point: rats(&b.point),
            schemes: b
                .schemes
                .iter()
                .map(|(k, s)| (k.clone(), SchemeJson::from_scheme(s)))
                .collect(),
            claims: b
                .claims
                .iter()
                .map(|(k, c)| {
                    let v = match *c {
                        Claim::Exactly(n) => ClaimJson::Exactly(n),
                        Claim::AtMost(n) => ClaimJson::AtMost { at_most: n },
                        Claim::AtLeast(n) => ClaimJson::AtLeast { at_least: n },
                    };
                    (k.clone(), v)
                })
                .collect(),
            observed: b.observed.clone(),
            violated: b.violated_claims().into_iter().map(String::from).collect(),
            trusted: b.trusted.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitInstanceJson {
    pub kind: &'static str,
    pub d: u32,
    pub seed: u64,
    pub line: LineJson,
    pub point: Vec<String>,
    pub schemes: BTreeMap<String, SchemeJson>,
}

impl SplitInstanceJson {
    pub fn from_instance(i: &SplitInstance) -> Self {
        let mut schemes = BTreeMap::new();
        for (k, s) in [("S", &i.s), ("Z", &i.z), ("S1", &i.s1), ("S2", &i.s2), ("Z1", &i.z1)] {
            schemes.insert(k.to_string(), SchemeJson::from_scheme(s));
        }
        SplitInstanceJson {
            kind: "split_instance",
            d: i.d,
            seed: i.seed,
            line: LineJson::from_line(&i.line),
            point: rats(&i.point),
            schemes,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeRowJson {
    pub d: u32,
    pub border_rank: usize,
    pub samples: usize,
    pub max_rank: usize,
    pub bound: usize,
    pub within_bound: bool,
    pub tangential_equality: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeJson {
    pub kind: &'static str,
    pub dmax: u32,
    pub seed: u64,
    pub rows: Vec<ProbeRowJson>,
}

impl ProbeJson {
    pub fn from_rows(dmax: u32, seed: u64, rows: &[ProbeRow]) -> Self {
        ProbeJson {
            kind: "probe",
            dmax,
            seed,
            rows: rows
                .iter()
                .map(|r| ProbeRowJson {
                    d: r.d,
                    border_rank: r.border_rank,
                    samples: r.samples,
                    max_rank: r.max_rank,
                    bound: r.bound,
                    within_bound: r.within_bound,
                    tangential_equality: r.tangential_equality,
                })
                .collect(),
        }
    }
}

/// Number of Veronese coordinates of a degree-`d` point of ℙ^m.
pub fn veronese_len(m: usize, d: u32) -> usize {
    poly::monomial_count(m + 1, d)
}
