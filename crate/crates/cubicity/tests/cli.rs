use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cubicity"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

const P3: &str = "3 2\n0 1\n1 2\n";
const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";
const STAR4: &str = "5 4\n0 1\n0 2\n0 3\n0 4\n";

#[test]
fn recognize_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["recognize", &write(dir.path(), "p3", P3)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["k"], 2);
    let out = run(&["recognize", &write(dir.path(), "c4", C4)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["reason"], "not-chordal");
}

#[test]
fn order_and_label_from_stdin() {
    let out = run_stdin(&["order", "-"], P3);
    assert!(out.status.success());
    assert_eq!(json(&out)["cliques"], serde_json::json!([[0, 1], [1, 2]]));
    let out = run_stdin(&["label", "-"], P3);
    let v = json(&out);
    assert_eq!(v["eta"], serde_json::json!([[0, 0], [1, 0], [2, 1]]));
    assert_eq!(v["primary"], serde_json::json!([0, 2]));
}

#[test]
fn params_of_star() {
    let v = json(&run_stdin(&["params", "-"], STAR4));
    assert_eq!((v["psi"].as_u64(), v["alpha"].as_u64()), (Some(4), Some(4)));
    assert_eq!(v["claw_center"], 0);
    assert_eq!(
        (v["lower_bound"].as_u64(), v["claw_dimension"].as_u64()),
        (Some(2), Some(4))
    );
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "s4", STAR4);
    for variant in ["claw", "alpha", "best"] {
        let rep = dir.path().join(format!("{variant}.json"));
        let out = run(&[
            "construct",
            &graph,
            "--variant",
            variant,
            "--normalize",
            "--out",
            rep.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
        assert_eq!(doc["verification"]["ok"], true);
        assert_eq!(doc["representation"]["side"], "1");
        let expected = if variant == "claw" { 4 } else { 2 };
        assert_eq!(doc["representation"]["dimension"], expected);
        let out = run(&["verify", &graph, rep.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out)["ok"], true);
    }
}

#[test]
fn construct_trace() {
    let v = json(&run_stdin(&["construct", "-", "--trace"], P3));
    let t = &v["trace"];
    assert_eq!(t["f"], serde_json::json!(["0", "1"]));
    assert_eq!(t["psi_prime"], 2);
    assert_eq!(t["branches"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_detects_bad_representation() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "p3", P3);
    let rep = write(
        dir.path(),
        "rep",
        r#"{"dimension":1,"side":"1","coords":[["0"],["0"],["0"]]}"#,
    );
    let out = run(&["verify", &graph, &rep]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["missing_separation"], serde_json::json!([[0, 2]]));
}

#[test]
fn exact_and_refusal() {
    let v = json(&run_stdin(&["exact", "-"], C4));
    assert_eq!(v["cub"], 2);
    assert_eq!(run_stdin(&["exact", "-", "--max-b", "1"], C4).status.code(), Some(3));
    let big = "9 0\n";
    assert_eq!(run_stdin(&["exact", "-"], big).status.code(), Some(3));
}

#[test]
fn gen_is_deterministic_and_feeds_pipeline() {
    let a = run(&["gen", "--n", "40", "--seed", "7", "--dist", "nested-heavy"]);
    let b = run(&["gen", "--n", "40", "--seed", "7", "--dist", "nested-heavy"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let model = String::from_utf8(a.stdout).unwrap();
    let out = run_stdin(&["construct", "-", "--variant", "best"], &model);
    assert!(out.status.success());
    assert_eq!(run(&["gen", "--n", "0"]).status.code(), Some(4));
}

#[test]
fn search_writes_report_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("h.csv");
    let out = run(&[
        "search",
        "--count",
        "200",
        "--seed",
        "4",
        "--stars",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["graphs_tried"], 205);
    assert_eq!(v["violations"], serde_json::json!([]));
    assert!(std::fs::read_to_string(&csv)
        .unwrap()
        .starts_with("psi,alpha,cub,dim,count\n"));
    let again = run(&["search", "--count", "200", "--seed", "4", "--stars"]);
    assert_eq!(again.stdout, out.stdout);
    assert_eq!(run(&["search", "--n-max", "9"]).status.code(), Some(3));
}

#[test]
fn bad_input() {
    assert_eq!(run_stdin(&["order", "-"], "2 1\n0 5\n").status.code(), Some(4));
    assert_eq!(run(&["order", "/nonexistent/graph"]).status.code(), Some(4));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
