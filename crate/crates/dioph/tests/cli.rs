//! End-to-end tests of the `dioph` binary: exit-code contract, JSON
//! shape, and the stderr/stdout split in machine mode.

use std::process::{Command, Output};

use serde_json::Value;

fn dioph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dioph"))
        .args(args)
        .output()
        .expect("spawn dioph")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

/// Machine mode must emit exactly one JSON document on stdout.
fn single_json_doc(out: &Output) -> Value {
    let text = stdout(out);
    let doc: Value = serde_json::from_str(text.trim_end()).expect("stdout is one JSON document");
    assert_eq!(text.matches('\n').count(), 1, "one line, one document");
    doc
}

#[test]
fn count_reports_total_and_agreement() {
    let out = dioph(&["count", "3", "4", "12", "--b", "24", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = single_json_doc(&out);
    assert_eq!(doc["status"], "ok");
    assert_eq!(doc["command"], "count");
    assert_eq!(doc["tuple"], serde_json::json!([3, 4, 12]));
    assert_eq!(doc["b"], "24");
    assert_eq!(doc["result"]["total"], "6");
    assert_eq!(doc["result"]["route"], "structural");
    assert_eq!(doc["result"]["special_case"]["applies"], true);
    assert_eq!(doc["result"]["special_case"]["route"], "special_eq13");
    assert_eq!(doc["result"]["special_case"]["agrees"], true);
}

#[test]
fn count_zero_and_human_mode() {
    let out = dioph(&["count", "2", "3", "--b", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("P(1) = 0"));
}

#[test]
fn count_handles_huge_b() {
    let out = dioph(&[
        "count",
        "2",
        "3",
        "--b",
        "600000000000000000000000000000",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = single_json_doc(&out);
    assert_eq!(doc["result"]["total"], "100000000000000000000000000001");
}

#[test]
fn count_rejects_non_coprime() {
    let out = dioph(&["count", "4", "6", "--b", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not setwise coprime"), "stderr: {err}");
}

#[test]
fn count_rejects_garbage_b() {
    let out = dioph(&["count", "2", "3", "--b", "twelve"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_requires_two_coefficients() {
    let out = dioph(&["count", "5", "--b", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_errors_keep_stdout_machine_readable() {
    let out = dioph(&["count", "4", "6", "--b", "10", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = single_json_doc(&out);
    assert_eq!(doc["status"], "error");
    assert_eq!(doc["command"], "count");
    assert!(doc["error"]
        .as_str()
        .unwrap()
        .contains("not setwise coprime"));
}

#[test]
fn solvable_exit_codes() {
    let out = dioph(&["solvable", "2", "4", "5", "5", "6", "--b", "3", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = single_json_doc(&out);
    assert_eq!(doc["result"]["solvable"], false);
    assert_eq!(doc["certificates"], serde_json::json!(["EXACT_ZERO_COUNT"]));

    let out = dioph(&["solvable", "2", "3", "--b", "0"]);
    assert_eq!(out.status.code(), Some(0));

    let out = dioph(&["solvable", "4", "6", "--b", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solvable_reports_pair_certificate() {
    let out = dioph(&["solvable", "3", "4", "99", "--b", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = single_json_doc(&out);
    let certs: Vec<String> = doc["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect();
    assert!(
        certs.contains(&"THM5(1,2)".to_string()),
        "certificates: {certs:?}"
    );
    assert!(certs.contains(&"EXACT_POSITIVE_COUNT".to_string()));
}

#[test]
fn frobenius_reports_bounds_and_gaps() {
    let out = dioph(&["frobenius", "2", "4", "5", "5", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = single_json_doc(&out);
    assert_eq!(doc["result"]["exact"], "3");
    assert_eq!(doc["result"]["method"], "residue_shortest_path");
    assert_eq!(doc["bounds"]["thm8"]["value"], "3");
    assert_eq!(doc["bounds"]["thm8"]["gap"], "0");
    assert_eq!(doc["bounds"]["r0"], Value::Null);

    let out = dioph(&["frobenius", "6", "10", "15", "--json"]);
    let doc = single_json_doc(&out);
    assert_eq!(doc["result"]["exact"], "29");
    assert_eq!(doc["bounds"]["thm8"], Value::Null);

    let out = dioph(&["frobenius", "1", "9", "--json"]);
    let doc = single_json_doc(&out);
    assert_eq!(doc["result"]["exact"], "-1");
    assert_eq!(doc["result"]["method"], "all_representable");
}

#[test]
fn frobenius_forbids_b() {
    let out = dioph(&["frobenius", "2", "3", "--b", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_composes_all_three() {
    let out = dioph(&["analyze", "3", "4", "12", "--b", "24", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = single_json_doc(&out);
    assert_eq!(doc["result"]["count"]["total"], "6");
    assert_eq!(doc["result"]["solvability"]["solvable"], true);
    assert_eq!(doc["result"]["frobenius"]["exact"], "5");
    assert_eq!(doc["bounds"]["r0"]["sharp"], true);
    assert!(doc["certificates"].as_array().is_some());
}

#[test]
fn verify_small_sweep_passes() {
    let out = dioph(&[
        "verify",
        "--max-n",
        "4",
        "--max-coeff",
        "12",
        "--samples",
        "50",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("result: PASS"), "{text}");

    let out = dioph(&[
        "verify",
        "--max-n",
        "3",
        "--max-coeff",
        "8",
        "--samples",
        "30",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = single_json_doc(&out);
    assert_eq!(doc["result"]["all_passed"], true);
    assert_eq!(doc["result"]["corpus"]["random"], 30);
}

#[test]
fn verify_rejects_bad_limits() {
    let out = dioph(&["verify", "--max-n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(dioph(&["--help"]).status.code(), Some(0));
    assert_eq!(dioph(&["--version"]).status.code(), Some(0));
    assert_eq!(dioph(&[]).status.code(), Some(2));
}
