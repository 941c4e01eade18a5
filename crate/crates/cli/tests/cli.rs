use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringcodes")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn idempotents_of_order_three() {
    let o = run(&["idempotents", "--p", "7", "--m", "1", "--e", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("mu_1 = 6u^2 + 3u + 5"), "{text}");
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn tab2_replay_marks_one_row_disputed() {
    let o = run(&["tables", "--which", "tab2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| l.contains(" tab2 ")).collect();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows.iter().filter(|l| l.starts_with("PASS")).count(), 6);
    let disputed: Vec<&&str> = rows.iter().filter(|l| l.starts_with("DISPUTED")).collect();
    assert_eq!(disputed.len(), 1);
    assert!(disputed[0].contains("q=19"));
}

#[test]
fn tables_json_is_an_array_of_rows() {
    let v = json(&run(&["tables", "--which", "tabA", "--format", "json"]));
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["status"] == "PASS"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["distance", "--spec", "missing.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--p", "5", "--e", "2"]).status.code(), Some(2));
    assert_eq!(run(&["factor", "--p", "4", "--n", "3"]).status.code(), Some(1));
    let o = run(&["check", "--p", "5", "--e", "2", "--n", "6", "--g", "1,3;1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "not_divisor");
}

#[test]
fn malformed_spec_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"p\": 5").unwrap();
    let o = run(&["check", "--spec", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "bad_spec");
}

fn build_to(dir: &Path, args: &[&str]) -> (String, Value) {
    let path = dir.join("code.json");
    let mut full = vec!["build", "--out", path.to_str().unwrap()];
    full.extend_from_slice(args);
    assert!(run(&full).status.success());
    let built: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    (path.to_str().unwrap().to_string(), built)
}

#[test]
fn build_output_round_trips_through_distance_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let (path, built) =
        build_to(dir.path(), &["--p", "5", "--e", "2", "--n", "6", "--g", "1,4;1,2,2,1", "--gray-matrix", "1,-1;1,1"]);
    let checked = json(&run(&["check", "--spec", &path, "--format", "json"]));
    assert_eq!(checked["classification"], built["classification"]);
    assert_eq!(checked["result"]["params"], "[12,8,4]_5");
    assert_eq!(checked["result"]["lcd"], true);
    assert_eq!(checked["result"]["free"], false);
    assert_eq!(checked["result"]["hull_dim"], 0);
    let dist = json(&run(&["distance", "--spec", &path, "--format", "json"]));
    assert_eq!(dist["d"], 4);
    assert_eq!(dist["weight_distribution"]["0"], 1);
    assert_eq!(dist["weight_distribution"]["4"], 276);
}

#[test]
fn order_three_example_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (path, built) = build_to(
        dir.path(),
        &["--p", "7", "--e", "3", "--n", "3", "--g", "1,6;1;1,1,1", "--gray-matrix", "2,1,2;5,2,1;1,2,5"],
    );
    let checked = json(&run(&["check", "--spec", &path, "--format", "json"]));
    assert_eq!(checked["classification"], built["classification"]);
    assert_eq!(checked["result"]["params"], "[9,6,3]_7");
    assert_eq!(checked["result"]["optimal_ref"], "Optimal");
}

#[test]
fn search_writes_json_results() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("results.json");
    let o = run(&[
        "search", "--p", "5", "--m", "1", "--e", "2", "--n", "6", "--lcd", "--non-free", "--gray-matrix", "1,4;1,1",
        "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let results = v.as_array().unwrap();
    assert!(!results.is_empty());
    assert!(results.iter().all(|r| r["lcd"] == true && r["free"] == false && r["hull_dim"] == 0));
    let rerun = dir.path().join("again.json");
    run(&[
        "search", "--p", "5", "--e", "2", "--n", "6", "--lcd", "--non-free", "--gray-matrix", "1,4;1,1", "--out",
        rerun.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&rerun).unwrap());
}

#[test]
fn factor_and_gray_verbs() {
    let v = json(&run(&["factor", "--p", "5", "--n", "10", "--format", "json"]));
    assert_eq!(v["divisor_count"], "36");
    assert_eq!(v["factors"].as_array().unwrap().len(), 2);
    let v = json(&run(&["gray", "--p", "7", "--e", "3", "--format", "json"]));
    assert!(v["gray_matrix"].as_str().unwrap().split(';').count() == 3);
    let v = json(&run(&["gray", "--p", "5", "--e", "2", "--n", "3", "--g", "1,4;1", "--format", "json"]));
    assert_eq!(v["n"], 6);
    assert_eq!(v["k"], 5);
}
