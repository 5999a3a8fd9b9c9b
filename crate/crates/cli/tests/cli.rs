use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qua(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qua")).args(args).output().expect("binary runs")
}

fn spec(name: &str, body: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn fock() -> String {
    spec("fock.json", r#"{"kind": "gwa-weight", "n": 2, "omega": ["1", "1", "1"], "radius": 5}"#)
}

#[test]
fn identities_pass_and_filter() {
    let out = qua(&["identities", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let rep = json(&out);
    let recs = rep["records"].as_array().unwrap();
    for tag in ["qg1", "qg2", "qg3", "qg4", "qg6", "qg7", "braid", "serre"] {
        assert!(recs.iter().any(|r| r["check"] == tag), "{tag}");
    }
    assert!(recs.iter().all(|r| r["status"] == "pass" && r["residual"] == "0"));

    let out = qua(&["identities", "--n", "3", "--only", "qg4"]);
    assert_eq!(code(&out), 0);
    let rep = json(&out);
    assert!(rep["records"].as_array().unwrap().iter().all(|r| r["check"] == "qg4"));
}

#[test]
fn usage_errors_exit_two() {
    let out = qua(&["identities", "--n", "0"]);
    assert_eq!(code(&out), 2);
    assert_eq!(code(&qua(&["identities", "--n", "5"])), 2);
    assert_eq!(code(&qua(&["identities", "--n", "2", "--only", "nope"])), 2);
    assert_eq!(code(&qua(&["identities"])), 2);
    let bad = spec("bad.json", r#"{"kind": "gwa-weight", "n": 2, "omega": ["c1", "1", "1$"], "params": ["c1"], "radius": 3}"#);
    let out = qua(&["module", "build", "--spec", &bad]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("'1$'") && err.contains("'$'"), "{err}");
    let big = spec("big.json", r#"{"kind": "gwa-weight", "n": 7, "omega": ["1","1","1","1","1","1","1","1"], "radius": 1}"#);
    assert_eq!(code(&qua(&["module", "build", "--spec", &big])), 2);
}

#[test]
fn pi_check_passes() {
    let out = qua(&["pi-check", "--n", "2", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().all(|l| l.contains(" pass ")));
}

#[test]
fn fock_decomposition() {
    let out = qua(&["module", "decompose", "--spec", &fock()]);
    let pieces = json(&out)["pieces"].as_array().unwrap().clone();
    let full: Vec<(i64, u64)> = pieces
        .iter()
        .filter(|p| p["truncated"] == false)
        .map(|p| (p["m"].as_i64().unwrap(), p["dim"].as_u64().unwrap()))
        .collect();
    assert_eq!(full, vec![(0, 1), (1, 3), (2, 6), (3, 10), (4, 15), (5, 21)]);
    assert_eq!(pieces[2]["highest_weight"], serde_json::json!(["q^2", "1"]));
    // Pieces beyond the radius are cut off, so the run is inconclusive.
    assert_eq!(code(&out), 3);
}

#[test]
fn mixed_module_classification() {
    let s = spec("c1.json", r#"{"kind": "gwa-weight", "n": 2, "omega": ["c1", "1", "1"], "params": ["c1"], "radius": 3}"#);
    let out = qua(&["module", "classify", "--spec", &s]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let part = &v["partition"];
    let len = |k: &str| part[k].as_array().unwrap().len();
    assert!(len("n_s") + len("n_a") > 0 && len("t_s") + len("t_a") > 0);
    assert!(part["n_a"].as_array().unwrap().contains(&"e1-e2".into()));
    assert_eq!(v["checks"]["fail"], 0);
}

#[test]
fn highest_weight_classification_reports_family() {
    let s = spec("hw.json", r#"{"kind": "highest-weight", "n": 2, "lambda": ["c1", "1"], "params": ["c1"], "radius": 4}"#);
    let v = json(&qua(&["module", "classify", "--spec", &s]));
    assert_eq!(v["highest_weight"]["matches"], true);
    assert!(v["highest_weight"]["tags"].as_array().unwrap().contains(&"c-first".into()));
    assert_eq!(v["invariant_vector"]["point"], serde_json::json!([0, 0, 0]));
    let bad = spec("hw-bad.json", r#"{"kind": "highest-weight", "n": 2, "lambda": ["q", "q"], "radius": 2}"#);
    assert_eq!(code(&qua(&["module", "build", "--spec", &bad])), 1);
}

#[test]
fn mu_solve_recovers_seed() {
    let s = spec("mu.json", r#"{"kind": "gwa-weight", "n": 2, "omega": ["c1", "c2", "1"], "params": ["c1", "c2"], "radius": 2}"#);
    let out = qua(&["module", "mu-solve", "--spec", &s]);
    assert_eq!(code(&out), 0);
    let sols = json(&out)["solutions"].as_array().unwrap().clone();
    assert!(sols.iter().any(|x| x["mu"] == serde_json::json!(["c1", "c2", "1"]) && x["tag"] == "identity"));
    let out = qua(&["module", "mu-solve", "--spec", &s, "--point", "1,-1,0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&qua(&["module", "mu-solve", "--spec", &s, "--point", "9,0,0"])), 2);
}

#[test]
fn export_is_stable() {
    let f = fock();
    let dot = qua(&["export", "--spec", &f, "--radius", "2", "--max-degree", "2", "--format", "dot"]);
    assert_eq!(code(&dot), 0);
    let text = String::from_utf8(dot.stdout.clone()).unwrap();
    let nodes = text.lines().filter(|l| l.trim_start().starts_with('p') && !l.contains("->")).count();
    assert_eq!(nodes, 10);
    let seq = qua(&["--jobs", "1", "export", "--spec", &f, "--radius", "2", "--max-degree", "2", "--format", "dot"]);
    assert_eq!(seq.stdout, dot.stdout);
    let a = qua(&["export", "--spec", &f, "--radius", "2"]);
    let b = qua(&["--jobs", "3", "export", "--spec", &f, "--radius", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let empty = qua(&["export", "--spec", &f, "--max-degree", "-1", "--format", "dot"]);
    assert_eq!(String::from_utf8(empty.stdout).unwrap(), "digraph module {\n}\n");
}

#[test]
fn output_file_and_overrides() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("report.json");
    let out = qua(&["identities", "--n", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let rep: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!rep["records"].as_array().unwrap().is_empty());
    let s = spec("over.json", r#"{"kind": "gwa-weight", "n": 2, "omega": ["c1", "1", "1"], "radius": 3}"#);
    assert_eq!(code(&qua(&["module", "build", "--spec", &s])), 2);
    let out = qua(&["module", "build", "--spec", &s, "--params", "c1", "--radius", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&qua(&["module", "build", "--spec", &s, "--params", "c1", "--n", "3"])), 2);
}
