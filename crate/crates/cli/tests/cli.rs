//! End-to-end tests of the `exmat` binary: file formats, exit codes,
//! report determinism.

use std::path::Path;
use std::process::{Command, Output};

fn exmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exmat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_tmp(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn gen_construction_header_and_avoidance_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = dir.path().join("a2.mtx");
    let out = exmat(&["gen", "construction", "--t", "2", "--k", "2", "-o", a2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&a2).unwrap();
    assert!(text.starts_with("256 256 480\n"), "header was {:?}", text.lines().next());

    let x2 = dir.path().join("x2.pat");
    let out = exmat(&["gen", "pattern", "--family", "Xt", "--t", "2", "-o", x2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // X_2 is avoided: exit code 1.
    let out = exmat(&["contains", "--pattern", x2.to_str().unwrap(), "--matrix", a2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // P_2 is contained: exit code 0, witness validates in the report.
    let p2 = dir.path().join("p2.pat");
    exmat(&["gen", "pattern", "--family", "Pt", "--t", "2", "-o", p2.to_str().unwrap()]);
    let out = exmat(&[
        "contains",
        "--pattern",
        p2.to_str().unwrap(),
        "--matrix",
        a2.to_str().unwrap(),
        "--witness",
        "--json",
        "-",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["results"]["contained"], serde_json::json!(true));
    assert!(report["results"]["witness"]["row_map"].is_array());
}

#[test]
fn pattern_round_trip_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.pat");
    exmat(&["gen", "pattern", "--name", "T", "-o", path.to_str().unwrap()]);
    let bytes1 = std::fs::read(&path).unwrap();

    // classify reads it back and reports the catalog facts.
    let out = exmat(&["classify", "--pattern", path.to_str().unwrap(), "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["results"]["acyclic"], serde_json::json!(true));
    assert_eq!(report["results"]["degeneracy"], serde_json::json!("NotDegenerate"));
    assert_eq!(report["results"]["weight"], serde_json::json!(7));

    // Re-emitting the same pattern yields identical bytes.
    let path2 = dir.path().join("t2.pat");
    exmat(&["gen", "pattern", "--name", "T", "-o", path2.to_str().unwrap()]);
    assert_eq!(bytes1, std::fs::read(&path2).unwrap());
}

#[test]
fn usage_and_scale_exit_codes() {
    // Unknown flag: 64.
    let out = exmat(&["contains", "--bogus"]);
    assert_eq!(out.status.code(), Some(64));
    // Missing file: 64.
    let out = exmat(&["classify", "--pattern", "/nonexistent/x.pat"]);
    assert_eq!(out.status.code(), Some(64));
    // Unknown catalog name: 64.
    let dir = tempfile::tempdir().unwrap();
    let out = exmat(&["gen", "pattern", "--name", "nope", "-o", dir.path().join("x").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(64));
    // Construction too large to materialize: 65.
    let out = exmat(&["gen", "construction", "--t", "3", "--k", "3", "-o", "-"]);
    assert_eq!(out.status.code(), Some(65));
    // t out of range: 64.
    let out = exmat(&["density", "--t", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(64));
    // Malformed pattern file: 64.
    let bad = write_tmp(dir.path(), "bad.pat", "2 2\nX.\nXO\n");
    let out = exmat(&["classify", "--pattern", &bad]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn verify_reports_are_byte_identical_given_seed() {
    let args = [
        "verify", "--t", "2", "--k", "2", "--checks", "2,4,r4", "--samples", "5000", "--seed",
        "42", "--json", "-",
    ];
    let a = exmat(&args);
    let b = exmat(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["seed"], serde_json::json!(42), "seed must be echoed");
    assert_eq!(report["results"]["all_pass"], serde_json::json!(true));
    // Thread count must not change the payload.
    let c = exmat(&["--threads", "4", "verify", "--t", "2", "--k", "2", "--checks", "2,4,r4",
        "--samples", "5000", "--seed", "42", "--json", "-"]);
    assert_eq!(stdout(&a), stdout(&c));
}

#[test]
fn extremal_greedy_echoes_seed_and_reproduces() {
    let dir = tempfile::tempdir().unwrap();
    let id2 = write_tmp(dir.path(), "id2.pat", "2 2\nX.\n.X\n");
    let args = ["extremal", "--pattern", &id2, "--n", "10", "--method", "greedy", "--seed", "7",
        "--json", "-"];
    let a = exmat(&args);
    let b = exmat(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let report: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(report["seed"], serde_json::json!(7));
    assert!(report["results"]["value"].as_u64().unwrap() >= 10);

    let bnb = exmat(&["extremal", "--pattern", &id2, "--n", "4", "--method", "bnb", "--json", "-"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&bnb)).unwrap();
    assert_eq!(report["results"]["value"], serde_json::json!(7));
}

#[test]
fn verify_all_checks_pass_at_t2_k2() {
    let out = exmat(&["verify", "--t", "2", "--k", "2", "--checks", "all", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = report["results"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 10);
    assert!(checks.iter().all(|c| c["pass"] == serde_json::json!(true)));
    // Everything fits the exhaustive budget at this size.
    assert!(checks.iter().all(|c| c["mode"] == serde_json::json!("Exhaustive")));
}

#[test]
fn reduce_chain_via_cli() {
    let dir = tempfile::tempdir().unwrap();
    let x3 = dir.path().join("x3.pat");
    exmat(&["gen", "pattern", "--family", "Xt", "--t", "3", "-o", x3.to_str().unwrap()]);
    let out = exmat(&[
        "reduce", "--pattern", x3.to_str().unwrap(), "--target-weight", "3", "--json", "-",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["results"]["length"], serde_json::json!(9));
    assert_eq!(report["results"]["final_weight"], serde_json::json!(3));

    // A pattern with no reductions at all: exit 1, found = false.
    let row = write_tmp(dir.path(), "row.pat", "1 3\nXXX\n");
    let out = exmat(&["reduce", "--pattern", &row, "--target-weight", "1", "--json", "-"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["results"]["found"], serde_json::json!(false));
}
