use std::process::Command;

use kunzkit::cli::{self, EXIT_OK, EXIT_USAGE};
use kunzkit::EtaProfile;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("kunzkit").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn info_json_has_expected_shape() {
    let (code, out, _) = run(&["info", "6", "9", "20", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(&out).unwrap();
    let s = &doc["semigroup"];
    assert_eq!(s["generators"], serde_json::json!([6, 9, 20]));
    assert_eq!(s["frobenius"], 43);
    assert_eq!(s["apery"], serde_json::json!([0, 49, 20, 9, 40, 29]));
    assert_eq!(s["eta"], 2);
    for key in ["atoms", "covers", "outer_betti", "nil_trades", "table"] {
        assert!(s["kunz"].get(key).is_some(), "missing kunz.{key}");
    }
    assert_eq!(s["kunz"]["table"].as_array().unwrap().len(), 7);
    assert_eq!(doc["agree"], true);
    assert_eq!(doc["eta_kunz"], doc["eta_direct"]);
}

#[test]
fn info_of_the_naturals() {
    let (code, out, _) = run(&["info", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["semigroup"]["frobenius"], -1);
    assert_eq!(doc["semigroup"]["kunz"], Value::Null);
}

#[test]
fn dot_output_has_one_node_per_residue() {
    let (code, out, _) = run(&["info", "10", "22", "23", "24", "--format", "dot"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("digraph kunz_poset"));
    let nodes = out.lines().filter(|l| l.contains("[label=")).count();
    assert_eq!(nodes, 10);
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = run(&["info", "4", "6"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("not cofinite"));

    assert_eq!(run(&["family", "eta3", "--m", "7"]).0, EXIT_USAGE);
    assert_eq!(run(&["family", "unknown", "--m", "7"]).0, EXIT_USAGE);
    assert_eq!(run(&["survey", "--m", "5..3"]).0, EXIT_USAGE);
    assert_eq!(run(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(run(&["info", "6", "9", "--format", "csv"]).0, EXIT_USAGE);
}

#[test]
fn help_and_version_succeed() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("survey"));
    assert_eq!(run(&["--version"]).0, EXIT_OK);
}

#[test]
fn family_prints_verified_triple() {
    let (code, out, _) = run(&["family", "embdim4", "--m", "7", "--eta", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("<7, 13, 16, 17>") || out.contains("7, 13, 16, 17"), "{out}");
    assert!(out.contains("(7, 4, 7)"));

    let (code, out, _) = run(&["family", "extend", "--m", "11", "--base", "4,5,6", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert!(doc.to_string().contains("48"));
}

#[test]
fn survey_emits_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("profile.csv");
    let json_path = dir.path().join("profile.json");
    for path in [&csv_path, &json_path] {
        let (code, _, err) = run(&["survey", "--m", "3..6", "--bound", "6", "--emit", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK, "{err}");
    }
    let from_csv = EtaProfile::read_csv(std::fs::File::open(&csv_path).unwrap()).unwrap();
    let from_json = EtaProfile::from_json(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(from_csv, from_json);
    assert_eq!(from_csv.multiplicities().into_iter().collect::<Vec<_>>(), vec![3, 4, 5, 6]);
}

#[test]
fn verify_reports_no_violations() {
    let (code, out, _) = run(&["verify", "--m", "2..6", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["violations"], serde_json::json!([]));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_kunzkit");
    let ok = Command::new(bin).args(["info", "3", "5"]).output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).contains("Frobenius number = 7"));
    let bad = Command::new(bin).args(["info", "4", "6"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
