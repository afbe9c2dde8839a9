//! JSON formats and the `waring` command line.
//!
//! Exit codes: 0 success, 1 malformed input, 2 rejected precondition (the
//! reason is in the emitted JSON), 64 usage error, 66 unreadable input file.

pub mod wire;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use waring_core::constructions;
use waring_core::scheme;
use waring_core::structure::{self, SplitOutcome};
use waring_core::sylvester;
use waring_core::{Error, Rat, Scheme};

use wire::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_NO_INPUT: i32 = 66;

#[derive(Debug, Parser)]
#[command(name = "waring", version, about = "Exact rank and border-rank certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Args)]
struct Common {
    /// Input JSON file.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write the JSON result here; a summary goes to standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Working precision in bits for numeric root refinement.
    #[arg(long, default_value_t = sylvester::DEFAULT_PRECISION)]
    precision: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Symmetric rank of a binary form with its apolar witness.
    RankBinary(Common),
    /// Symmetric border rank of a binary form.
    BorderRankBinary(Common),
    /// Minimal Waring decomposition of a binary form.
    DecomposeBinary(Common),
    /// Catalecticant ranks, or one catalecticant matrix with --a.
    Catalecticant {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        a: Option<u32>,
    },
    /// Span defect of a scheme under the degree-x Veronese map.
    H1 {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        x: u32,
    },
    /// The line carrying the dependence of a scheme of degree at most 2x+1.
    SpecialLine {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        x: u32,
    },
    /// Certify the split of a rank scheme S and a border-rank scheme Z.
    Split {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Line carrying half of one of two equal-degree decompositions.
    LemmaDd {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Rank, border rank and uniqueness certificate for a reduced scheme B.
    CertifyUnique {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Conic jet construction with sbr + sr = 2d + 2.
    #[command(name = "gen-example00")]
    GenExample00 {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        d: u32,
    },
    /// Two minimal decompositions on the conic sharing one point.
    GenExampleOplus {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        d: u32,
    },
    /// Planted split instance (S, Z, P).
    GenSplitFamily {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        d: u32,
        /// Length of the jet on the line; seeded when omitted.
        #[arg(long)]
        z1: Option<usize>,
        /// Number of points off the line; seeded when omitted.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Largest binary rank per border rank against d(b − 1).
    #[command(name = "probe-q1")]
    ProbeQ1 {
        #[command(flatten)]
        common: Common,
        /// Largest degree probed.
        #[arg(long)]
        d: u32,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    NoInput(String),
    Malformed(String),
    Rejected { reason: String, detail: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let reason = match &e {
            Error::Precondition { name, detail } => {
                return Failure::Rejected {
                    reason: (*name).to_string(),
                    detail: detail.clone(),
                }
            }
            Error::NotInSpan => "p_not_in_span",
            Error::ComponentTooLong { .. } => "component_too_long",
            Error::UnrepresentableUnion => "union_representable",
            Error::NonReduced => "non_reduced",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::LevelOutOfRange { .. } => "level_out_of_range",
            Error::NotOnCurveSpan => "not_on_curve_span",
            _ => return Failure::Malformed(e.to_string()),
        };
        Failure::Rejected {
            reason: reason.to_string(),
            detail: e.to_string(),
        }
    }
}

struct Emit {
    json: String,
    summary: String,
}

fn emit<T: Serialize>(value: &T, summary: String) -> Result<Emit, Failure> {
    let json = serde_json::to_string_pretty(value).map_err(|e| Failure::Malformed(e.to_string()))?;
    Ok(Emit { json, summary })
}

fn read_input(common: &Common) -> Result<String, Failure> {
    let path = common
        .input
        .as_ref()
        .ok_or_else(|| Failure::Malformed("--in is required".into()))?;
    std::fs::read_to_string(path).map_err(|e| Failure::NoInput(format!("{}: {e}", path.display())))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Malformed(format!("invalid JSON input: {e}")))
}

fn read_binary(common: &Common) -> Result<waring_core::BinaryForm, Failure> {
    let p: PolyJson = parse_json(&read_input(common)?)?;
    Ok(p.to_binary()?)
}

fn read_scheme(common: &Common) -> Result<Scheme, Failure> {
    let s: SchemeJson = parse_json(&read_input(common)?)?;
    Ok(s.to_scheme()?)
}

struct Instance {
    d: u32,
    point: Vec<Rat>,
    schemes: std::collections::BTreeMap<String, Scheme>,
}

impl Instance {
    fn get(&self, names: &[&str]) -> Result<&Scheme, Failure> {
        names
            .iter()
            .find_map(|n| self.schemes.get(*n))
            .ok_or_else(|| Failure::Malformed(format!("missing scheme {:?}", names[0])))
    }
}

fn read_instance(common: &Common, d: Option<u32>) -> Result<Instance, Failure> {
    let raw: InstanceJson = parse_json(&read_input(common)?)?;
    let d = d
        .or(raw.d)
        .ok_or_else(|| Failure::Malformed("degree missing: pass --d or a \"d\" field".into()))?;
    let point = parse_rats(&raw.point)?;
    let schemes = raw
        .schemes
        .iter()
        .map(|(k, s)| Ok((k.clone(), s.to_scheme()?)))
        .collect::<Result<_, Error>>()?;
    Ok(Instance { d, point, schemes })
}

fn check_summary(cs: &[CheckJson]) -> String {
    let passed = cs.iter().filter(|c| c.passed).count();
    format!("{passed}/{} checks passed", cs.len())
}

fn dispatch(cmd: &Command) -> Result<Emit, Failure> {
    match cmd {
        Command::RankBinary(c) => {
            let g = read_binary(c)?;
            let cert = sylvester::binary_rank(&g, c.seed)?;
            let out = RankJson::from_cert(&g, &cert);
            emit(&out, format!("rank {} border rank {}", cert.rank, cert.border_rank))
        }
        Command::BorderRankBinary(c) => {
            let g = read_binary(c)?;
            let br = sylvester::binary_border_rank(&g)?;
            let out = BorderRankJson {
                kind: "binary_border_rank",
                degree: g.degree(),
                border_rank: br,
            };
            emit(&out, format!("border rank {br}"))
        }
        Command::DecomposeBinary(c) => {
            let g = read_binary(c)?;
            let cert = sylvester::binary_decompose(&g, c.seed, c.precision)?;
            let dec = cert
                .decomposition
                .as_ref()
                .ok_or_else(|| Failure::Malformed("no decomposition produced".into()))?;
            let out = DecompositionJson::from_cert(&g, &cert, dec);
            let summary = format!(
                "rank {} ({}), residual bound {}",
                cert.rank,
                if dec.is_exact() { "exact" } else { "numeric" },
                waring_core::numeric::to_decimal(&dec.residual_bound, 40)
            );
            emit(&out, summary)
        }
        Command::Catalecticant { common, a } => {
            let p: PolyJson = parse_json(&read_input(common)?)?;
            let f = p.to_poly()?;
            let lower_bound = f.cat_lower_bound()?;
            let levels = match a {
                Some(a) => {
                    let mat = f.catalecticant(*a)?;
                    vec![CatLevelJson {
                        level: *a,
                        rows: mat.rows(),
                        cols: mat.cols(),
                        rank: mat.rank(),
                        matrix: Some(mat.row_vecs().iter().map(|r| rats(r)).collect()),
                    }]
                }
                None => (1..f.degree())
                    .map(|a| {
                        let mat = f.catalecticant(a)?;
                        Ok(CatLevelJson {
                            level: a,
                            rows: mat.rows(),
                            cols: mat.cols(),
                            rank: mat.rank(),
                            matrix: None,
                        })
                    })
                    .collect::<Result<_, Error>>()?,
            };
            let out = CatalecticantJson {
                kind: "catalecticant",
                m: f.m(),
                d: f.degree(),
                levels,
                lower_bound,
            };
            emit(&out, format!("catalecticant lower bound {lower_bound}"))
        }
        Command::H1 { common, x } => {
            let w = read_scheme(common)?;
            let h1 = scheme::h1(&w, *x)?;
            let out = H1Json {
                kind: "h1",
                x: *x,
                degree: w.degree(),
                span_dim: w.degree() - h1,
                h1,
            };
            emit(&out, format!("h1 = {h1}"))
        }
        Command::SpecialLine { common, x } => {
            let w = read_scheme(common)?;
            let sl = structure::find_special_line(&w, *x)?;
            let out = SpecialLineJson::from_result(*x, &sl);
            emit(&out, format!("line of degree {} (h1 = {})", sl.degree, sl.h1))
        }
        Command::Split { common, d } => {
            let inst = read_instance(common, *d)?;
            let s = inst.get(&["S"])?;
            let z = inst.get(&["Z"])?;
            match structure::split_theorem(s, z, &inst.point, inst.d, common.seed)? {
                SplitOutcome::Certified(c) => {
                    let out = SplitJson::from_cert(inst.d, &c);
                    let summary = format!("certified: t = {}, {}", c.t, check_summary(&out.checks));
                    emit(&out, summary)
                }
                SplitOutcome::Counterexample(r) => {
                    let out = CounterexampleJson::from_report(inst.d, &r);
                    emit(&out, format!("counterexample: failed {}", r.failed.join(", ")))
                }
            }
        }
        Command::LemmaDd { common, d } => {
            let inst = read_instance(common, *d)?;
            let a = inst.get(&["A", "S"])?;
            let b = inst.get(&["B", "S_prime"])?;
            let r = structure::lemma_dd_line(a, b, &inst.point, inst.d)?;
            let out = DdLineJson::from_result(inst.d, &r);
            emit(&out, format!("deg(line ∩ A) = {}", r.degree_with_a))
        }
        Command::CertifyUnique { common, d } => {
            let inst = read_instance(common, *d)?;
            let b = inst.get(&["B", "S"])?;
            let c = structure::theorem_oo_certify(b, &inst.point, inst.d)?;
            let out = UniquenessJson::from_cert(&c);
            let summary = format!(
                "rank = border rank = {} (lower bound {}), {}",
                c.rho,
                out.lower_bound.status,
                check_summary(&out.checks)
            );
            emit(&out, summary)
        }
        Command::GenExample00 { common, d } => {
            let b = constructions::gen_example_00(*d, common.seed)?;
            let out = BundleJson::from_bundle(&b);
            emit(&out, bundle_summary(&out))
        }
        Command::GenExampleOplus { common, d } => {
            let b = constructions::gen_example_oplus(*d, common.seed)?;
            let out = BundleJson::from_bundle(&b);
            emit(&out, bundle_summary(&out))
        }
        Command::GenSplitFamily { common, d, z1, t } => {
            let (z1d, td) = constructions::split_shape((*d).max(4), common.seed);
            let inst = constructions::gen_split_family(*d, common.seed, z1.unwrap_or(z1d), t.unwrap_or(td))?;
            let out = SplitInstanceJson::from_instance(&inst);
            let summary = format!("#S = {}, deg Z = {}", inst.s.degree(), inst.z.degree());
            emit(&out, summary)
        }
        Command::ProbeQ1 { common, d } => {
            let rows = constructions::probe_q1_binary(*d, common.seed)?;
            let out = ProbeJson::from_rows(*d, common.seed, &rows);
            let summary = rows
                .iter()
                .map(|r| format!("d={} b={} max rank {} bound {}", r.d, r.border_rank, r.max_rank, r.bound))
                .collect::<Vec<_>>()
                .join("\n");
            emit(&out, summary)
        }
    }
}

fn bundle_summary(b: &BundleJson) -> String {
    let observed: Vec<String> = b.observed.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{} d={}: {}", b.construction, b.d, observed.join(" "))
}

fn common_of(cmd: &Command) -> &Common {
    match cmd {
        Command::RankBinary(c) | Command::BorderRankBinary(c) | Command::DecomposeBinary(c) => c,
        Command::Catalecticant { common, .. }
        | Command::H1 { common, .. }
        | Command::SpecialLine { common, .. }
        | Command::Split { common, .. }
        | Command::LemmaDd { common, .. }
        | Command::CertifyUnique { common, .. }
        | Command::GenExample00 { common, .. }
        | Command::GenExampleOplus { common, .. }
        | Command::GenSplitFamily { common, .. }
        | Command::ProbeQ1 { common, .. } => common,
    }
}

/// Runs one invocation; `args` includes the program name. The JSON result is
/// written to `--out` when given, otherwise to `stdout`.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let common = common_of(&cli.command);
    let (code, result) = match dispatch(&cli.command) {
        Ok(e) => (EXIT_OK, Ok(e)),
        Err(Failure::Rejected { reason, detail }) => {
            let rej = Rejection {
                kind: "rejection",
                reason: reason.clone(),
                detail: detail.clone(),
            };
            let e = emit(&rej, format!("rejected [{reason}]: {detail}"))
                .map_err(|_| String::from("cannot serialize rejection"));
            (EXIT_REJECTED, e)
        }
        Err(Failure::Malformed(msg)) => (EXIT_MALFORMED, Err(msg)),
        Err(Failure::NoInput(msg)) => (EXIT_NO_INPUT, Err(msg)),
    };
    let emitted = match result {
        Ok(e) => e,
        Err(msg) => {
            return Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            }
        }
    };
    let json = emitted.json + "\n";
    let summary = emitted.summary + "\n";
    match &common.out {
        Some(path) => match std::fs::write(path, &json) {
            Ok(()) => Outcome {
                code,
                stdout: summary,
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: EXIT_MALFORMED,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome {
            code,
            stdout: match common.format {
                Format::Json => json,
                Format::Text => summary,
            },
            stderr: String::new(),
        },
    }
}
