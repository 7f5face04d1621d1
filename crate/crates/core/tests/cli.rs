//! Runs the built binary end to end.

use std::process::Command;

fn ncgraph(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ncgraph"))
        .args(args)
        .env_remove("NCGRAPH_ORACLE_MAX")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn bfile_for_n() {
    let (code, out, _) = ncgraph(&["seq", "N", "--from", "1", "--to", "9"]);
    assert_eq!(code, 0);
    let last = out.lines().last().unwrap();
    assert_eq!(last, "9 644908");
    assert_eq!(out.lines().count(), 9);
}

#[test]
fn methods_print_identical_bfiles() {
    let runs: Vec<String> = ["sum", "gf", "closed"]
        .iter()
        .map(|m| ncgraph(&["seq", "f3", "--to", "20", "--method", m]).1)
        .collect();
    assert!(runs.iter().all(|r| r == &runs[0]));
    assert!(runs[0].starts_with("0 1\n1 5\n2 39\n"));
}

#[test]
fn verify_json_row() {
    let (code, out, _) = ncgraph(&[
        "verify", "e-a1", "--r", "-2", "--i", "3", "--order", "20", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows[0]["check"], "e-a1");
    assert_eq!(rows[0]["status"], "pass");
}

#[test]
fn oracle_cap_from_environment() {
    let status = Command::new(env!("CARGO_BIN_EXE_ncgraph"))
        .args(["oracle", "--to", "9"])
        .env("NCGRAPH_ORACLE_MAX", "8")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    let err = String::from_utf8(status.stderr).unwrap();
    assert!(err.contains("above the configured maximum 8"), "{err}");
}

#[test]
fn errors_exit_two() {
    let (code, _, err) = ncgraph(&["verify", "no-such-check"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, _, _) = ncgraph(&["seq", "N", "--from", "5", "--to", "2"]);
    assert_eq!(code, 2);
}
