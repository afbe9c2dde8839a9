use std::path::{Path, PathBuf};
use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use waring_cli::wire::{PolyJson, SchemeJson};
use waring_cli::{run, Outcome};
use waring_core::rat::ratio;
use waring_core::{HomogPoly, Rat};

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus/v1")
}

fn schemas() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas")
}

fn load(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn validator(name: &str) -> jsonschema::JSONSchema {
    let schema = load(&schemas().join(name));
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft202012)
        .compile(&schema)
        .unwrap()
}

fn assert_valid(v: &jsonschema::JSONSchema, doc: &Value, what: &str) {
    if let Err(errors) = v.validate(doc) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{what} does not validate: {msgs:?}");
    }
}

struct Case {
    name: String,
    args: Vec<String>,
    exit: i32,
}

fn cases() -> Vec<Case> {
    let raw = load(&corpus().join("cases.json"));
    raw.as_array()
        .unwrap()
        .iter()
        .map(|c| Case {
            name: c["name"].as_str().unwrap().to_string(),
            args: c["args"]
                .as_array()
                .unwrap()
                .iter()
                .map(|a| a.as_str().unwrap().to_string())
                .collect(),
            exit: c["exit"].as_i64().unwrap() as i32,
        })
        .collect()
}

/// Runs a corpus case with input paths resolved inside the corpus directory.
fn run_case(case: &Case) -> Outcome {
    let dir = corpus();
    let mut args = vec!["waring".to_string()];
    let mut it = case.args.iter();
    while let Some(a) = it.next() {
        args.push(a.clone());
        if a == "--in" {
            let file = it.next().unwrap();
            args.push(dir.join(file).to_string_lossy().into_owned());
        }
    }
    run(args)
}

#[test]
fn golden_corpus() {
    let bless = std::env::var_os("WARING_BLESS").is_some();
    // cases may consume outputs of earlier cases, so they run in order
    for case in cases() {
        let out = run_case(&case);
        assert_eq!(out.code, case.exit, "{}: {}", case.name, out.stderr);
        let golden = corpus().join(format!("{}.out.json", case.name));
        if bless {
            std::fs::write(&golden, &out.stdout).unwrap();
        }
        let expected = std::fs::read_to_string(&golden)
            .unwrap_or_else(|_| panic!("missing golden file for {}", case.name));
        assert_eq!(out.stdout, expected, "{} differs from its golden output", case.name);
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for case in cases() {
        let a = run_case(&case);
        let b = run_case(&case);
        assert_eq!(a, b, "{}", case.name);
    }
}

#[test]
fn outputs_validate_against_schema() {
    let v = validator("output.schema.json");
    for case in cases() {
        let out = run_case(&case);
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_valid(&v, &doc, &case.name);
    }
}

#[test]
fn corpus_inputs_validate() {
    let poly = validator("polynomial.schema.json");
    let scheme = validator("scheme.schema.json");
    let instance = validator("instance.schema.json");
    for entry in std::fs::read_dir(corpus()).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        if name.ends_with(".out.json") || name == "cases.json" {
            continue;
        }
        let doc = load(&path);
        if doc.get("terms").is_some() {
            assert_valid(&poly, &doc, &name);
        } else if doc.get("components").is_some() {
            assert_valid(&scheme, &doc, &name);
        } else {
            assert_valid(&instance, &doc, &name);
        }
    }
}

#[test]
fn standalone_schemas_match_shared_definitions() {
    let out = load(&schemas().join("output.schema.json"));
    for name in ["polynomial", "scheme"] {
        let mut doc = load(&schemas().join(format!("{name}.schema.json")));
        let obj = doc.as_object_mut().unwrap();
        for k in ["$schema", "$id", "title", "$defs"] {
            obj.remove(k);
        }
        assert_eq!(&doc, &out["$defs"][name], "{name}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_waring");
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["frobnicate"]), Some(64));
    assert_eq!(code(&["rank-binary", "--bogus"]), Some(64));
    assert_eq!(code(&["--help"]), Some(0));
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&["h1", "--in", missing.to_str().unwrap(), "--x", "2"]), Some(66));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&["rank-binary", "--in", bad.to_str().unwrap()]), Some(1));
    let wrong_sum = dir.path().join("sum.json");
    std::fs::write(&wrong_sum, r#"{"m":1,"d":3,"terms":[{"exp":[2,0],"coef":"1"}]}"#).unwrap();
    assert_eq!(code(&["rank-binary", "--in", wrong_sum.to_str().unwrap()]), Some(1));

    let general = corpus().join("five_general.json");
    let out = Command::new(bin)
        .args(["special-line", "--in", general.to_str().unwrap(), "--x", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["reason"], "no_special_line");
    assert_eq!(v["detail"], "h1=0");
}

#[test]
fn out_flag_writes_json_and_prints_summary() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("bundle.json");
    let out = run(["waring", "gen-example00", "--d", "4", "--out", target.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("sr=7"));
    let v = load(&target);
    assert_eq!(v["claims"]["sbr"], 3);
    assert_eq!(v["claims"]["sr"], 7);
    assert_eq!(v["violated"], Value::Array(vec![]));
}

#[test]
fn rank_of_a_cube() {
    let out = run_case(&Case {
        name: "x3".into(),
        args: vec!["rank-binary".into(), "--in".into(), "x3.json".into()],
        exit: 0,
    });
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["rank"], 1);
    assert_eq!(v["border_rank"], 1);
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_json_round_trip(m in 1usize..4, d in 0u32..5, seed in prop::collection::vec(small_rat(), 35)) {
        let n = waring_core::poly::monomial_count(m + 1, d);
        let p = HomogPoly::new(m, d, seed.into_iter().cycle().take(n).collect()).unwrap();
        let json = serde_json::to_string(&PolyJson::from_poly(&p)).unwrap();
        let back: PolyJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_poly().unwrap(), p);
    }

    #[test]
    fn scheme_json_round_trip(coords in prop::collection::vec((-5i64..6, -5i64..6, 1i64..6), 1..5), jet in (-3i64..4, -3i64..4, -3i64..4)) {
        let mut comps = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for (i, (a, b, c)) in coords.iter().enumerate() {
            let p = waring_core::ProjPoint::from_ints(&[*a, *b, *c]).unwrap();
            if !seen.insert(p.clone()) {
                continue;
            }
            let v = [jet.0 + i as i64, jet.1, jet.2];
            let comp = waring_core::CurvComponent::from_ints(&[*a, *b, *c], &[&v])
                .unwrap_or_else(|_| waring_core::CurvComponent::point(p));
            comps.push(comp);
        }
        let s = waring_core::Scheme::new(2, comps).unwrap();
        let json = serde_json::to_string(&SchemeJson::from_scheme(&s)).unwrap();
        let back: SchemeJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_scheme().unwrap(), s);
    }
}
