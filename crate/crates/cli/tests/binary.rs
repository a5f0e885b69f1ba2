use std::path::PathBuf;
use std::process::{Command, Output};

fn csmlap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csmlap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn det_prints_value_and_exits_zero() {
    let out = csmlap(&["det", "--matrix", &data("two.txt")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "-2\n");
}

#[test]
fn structured_output_is_json() {
    let out = csmlap(&[
        "det",
        "--matrix",
        &data("two.txt"),
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["determinant"], "-2");
}

#[test]
fn verify_csm_exits_zero_when_equal() {
    let out = csmlap(&[
        "verify-csm",
        "--symbolic",
        "3",
        "--F",
        "2",
        "--G",
        "2",
        "--I",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict: EQUAL"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        vec!["det"],
        vec!["fuzz", "--trials", "5"],
        vec!["det", "--matrix", &data("bad.txt")],
        vec!["det", "--matrix", "/no/such/file"],
        vec!["verify-csm", "--symbolic", "3", "--F", "1", "--G", "1,2"],
        vec!["frobnicate"],
    ] {
        let out = csmlap(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn fuzz_run_is_reproducible() {
    let a = csmlap(&["fuzz", "--trials", "25", "--seed", "12345"]);
    let b = csmlap(&["fuzz", "--trials", "25", "--seed", "12345"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
