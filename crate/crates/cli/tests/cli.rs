use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn setdec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setdec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn enumerate_dectab_two() {
    let o = setdec(&["enumerate", "--family", "dectab", "--shape", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "9");
}

#[test]
fn apply_f2_prime_chain() {
    let start = tmp("chain.json", r#"{"shape":[4,2,1],"rows":[[[3,4],[2],[2],[2,3]],[[2],[1]],[[1]]]}"#);
    let o = setdec(&["apply", "--op", "f'", "--i", "2", "--tableau", start.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("[34|23|2|23]/[2|1]/[1]"));
    // the chain ends after four steps
    let last = tmp("chain_end.json", r#"{"shape":[4,2,1],"rows":[[[3,4],[3],[2,3],[3]],[[2],[1]],[[1]]]}"#);
    let o = setdec(&["apply", "--op", "f'", "--i", "2", "--tableau", last.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "null");
}

#[test]
fn ikeda_pass_report_has_scope() {
    let o = setdec(&["--json", "conjecture", "ikeda", "--shape", "2,1", "--n", "5", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["outcome"], "pass");
    assert_eq!(v["parameters"]["shape"], serde_json::json!([2, 1]));
    assert_eq!(v["parameters"]["n"], 5);
    assert_eq!(v["parameters"]["degree"], 5);
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["--json", "verify", "--axioms", "q_seminormal", "--family", "setdectab", "--shape", "2", "--n", "3"];
    let a = setdec(&args);
    let b = setdec(&args);
    assert_eq!(a.status.code(), Some(1));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["enumerate", "--family", "dectab", "--shape", "1,2", "--n", "3"][..],
        &["enumerate", "--family", "nosuch", "--shape", "2", "--n", "3"],
        &["apply", "--op", "f", "--tableau", "/nonexistent/t.json"],
        &["product", "--kind", "GP", "--lhs", "1,1", "--rhs", "1", "--n", "3", "--degree", "3"],
        &["graph", "--family", "dectab", "--shape", "2", "--n", "3", "--ops", "sqrt"],
    ] {
        assert_eq!(setdec(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn witnesses_replay_through_apply() {
    // [12|12] is reported as a q_seminormal witness: both bar strings vanish
    let o = setdec(&["verify", "--axioms", "q_seminormal", "--family", "setdectab", "--shape", "2", "--n", "2"]);
    assert!(stdout(&o).contains("[12|12]"));
    let t = tmp("witness.json", r#"{"shape":[2],"rows":[[[1,2],[1,2]]]}"#);
    for op in ["ebar", "fbar"] {
        let o = setdec(&["apply", "--op", op, "--tableau", t.to_str().unwrap()]);
        assert_eq!(stdout(&o).trim(), "null", "{op}");
    }
}

#[test]
fn sqrt_conjectures_and_products() {
    let o = setdec(&["conjecture", "connected", "--shape", "2", "--n", "3", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = setdec(&["conjecture", "unique-highest", "--shape", "2,1", "--n", "3", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = setdec(&["product", "--kind", "G", "--lhs", "1", "--rhs", "1", "--n", "3", "--degree", "3"]);
    assert_eq!(stdout(&o), "(1,1)\t1\n(2)\t1\n(2,1)\t1\nresidual\t0\n");
}

#[test]
fn expand_reports_residual() {
    let p = tmp("p1.json", r#"{"1,0":1,"0,1":1}"#);
    let o = setdec(&["expand", "--gp", "--input", p.to_str().unwrap(), "--degree", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "(1)\t1\nresidual\t- 1 x1^1 x2^1\n");
}

#[test]
fn graph_writes_dot() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("g.dot");
    let o = setdec(&["graph", "--family", "dectab", "--shape", "2,1", "--n", "3", "--q", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&out).unwrap();
    assert!(dot.starts_with("digraph crystal {"));
    assert!(dot.contains("style=dashed"));
}
