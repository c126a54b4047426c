//! End-to-end checks of the `fibinv` binary: stdout bytes, records, exit codes.

use std::process::{Command, Output};

fn fibinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibinv")).args(args).output().expect("spawn fibinv")
}

fn stdout(args: &[&str]) -> String {
    let out = fibinv(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn seq_handles_signed_indices() {
    assert_eq!(stdout(&["seq", "fib", "-4"]), "-3\n");
    assert_eq!(stdout(&["seq", "fib", "--", "-4"]), "-3\n");
    assert_eq!(stdout(&["seq", "fib", "10"]), "55\n");
    assert_eq!(stdout(&["seq", "lucas", "0"]), "2\n");
    assert_eq!(stdout(&["seq", "lucas", "1"]), "1\n");
    assert_eq!(stdout(&["seq", "lucas", "-5"]), "-11\n");
}

#[test]
fn inv_prints_residue_or_marker() {
    assert_eq!(stdout(&["inv", "fib", "3", "7"]), "7\n");
    assert_eq!(stdout(&["inv", "fib", "5", "7"]), "8\n");
    assert_eq!(stdout(&["inv", "lucas", "3", "6"]), "NONINVERTIBLE\n");
}

#[test]
fn classify_emits_the_expected_record() {
    let line = stdout(&["classify", "fib", "5", "7", "--format", "jsonl"]);
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["kind"], "classification");
    assert_eq!(v["outcome"], "solution");
    assert_eq!(v["l"], 6);
    assert_eq!(v["case"], "c1");

    assert_eq!(stdout(&["classify", "lucas", "3", "6"]), "noninvertible\n");
    assert_eq!(stdout(&["classify", "fib", "3", "7"]), "not_fibonacci\n");
}

#[test]
fn certify_attaches_a_unit_remainder() {
    let line = stdout(&["classify", "fib", "5", "7", "--certify", "--format", "jsonl"]);
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["residue"], "8");
    assert_eq!(v["coeff"], "3");
    assert_eq!(v["residual"], "1");

    // Outside the piecewise window the certificate comes from plain division.
    let line = stdout(&["classify", "lucas", "25", "6", "--certify", "--format", "jsonl"]);
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(v["outcome"], "solution");
    assert_eq!(v["l"], 1);
    assert_eq!(v["residual"], "1");
}

#[test]
fn enumerate_lists_and_tallies() {
    let rows = stdout(&["enumerate", "fib", "--n-max", "4"]);
    assert_eq!(rows.lines().count(), 10);
    assert!(rows.starts_with("n=4 m=3 l=3 case=c2\n"));

    let census = stdout(&["enumerate", "lucas", "--n-max", "6", "--census", "--format", "jsonl"]);
    let last: serde_json::Value = serde_json::from_str(census.lines().last().unwrap()).unwrap();
    assert_eq!(last["kind"], "census_total");
    assert_eq!(last["total"], 8);
}

#[test]
fn verify_suites_are_clean_and_exit_zero() {
    let out =
        fibinv(&["verify", "theorem", "--family", "lucas", "--n-max", "30", "--format", "jsonl"]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
    assert_eq!(v["kind"], "verify_summary");
    assert_eq!(v["mismatches"], 0);

    assert!(fibinv(&["verify", "lemma1", "--bound", "10"]).status.success());
}

#[test]
fn rerunning_is_byte_for_byte_deterministic() {
    let first = stdout(&["enumerate", "fib", "--n-max", "25", "--format", "jsonl"]);
    let second = stdout(&["enumerate", "fib", "--n-max", "25", "--format", "jsonl"]);
    assert_eq!(first, second);
}

#[test]
fn quiet_silences_stdout_but_still_mirrors() {
    let path = std::env::temp_dir().join(format!("fibinv-mirror-{}.txt", std::process::id()));
    let out = fibinv(&["classify", "fib", "9", "11", "--quiet", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "solution l=10 case=c1\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn domain_errors_exit_one_with_a_diagnostic() {
    let out = fibinv(&["inv", "fib", "0", "7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));

    let out = fibinv(&["inv", "fib", "0", "7", "--format", "jsonl"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
    assert_eq!(v["kind"], "error");

    let out = fibinv(&["seq", "fib", "2000001"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(fibinv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fibinv(&["verify", "lemma1", "--n-max", "9"]).status.code(), Some(2));
    assert_eq!(fibinv(&["verify", "theorem", "--bound", "9"]).status.code(), Some(2));
    assert_eq!(fibinv(&["seq", "fib"]).status.code(), Some(2));
}

#[test]
fn max_index_bounds_direct_evaluation() {
    let out = fibinv(&["seq", "fib", "50", "--max-index", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&["seq", "fib", "50", "--max-index", "50"]), "12586269025\n");
}
