//! End-to-end runs of the `dio` binary. Outputs of deterministic commands are
//! compared against `tests/golden/`; set `UPDATE_GOLDEN=1` to rewrite them.

use proptest::prelude::*;
use std::path::PathBuf;
use std::process::{Command, Output};

fn dio(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dio")).args(args).env("DIO_THREADS", "2").output().expect("dio runs")
}

fn golden(name: &str, args: &[&str], code: i32) {
    let out = dio(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let actual = String::from_utf8(out.stdout).unwrap();
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output of {args:?} differs from {}", path.display());
}

#[test]
fn golden_family() {
    golden(
        "family_n2_case1.json",
        &["--json", "family", "--id", "n2-case1", "--a-range", "1:3", "--b-range", "1:2", "--t", "1", "--reduce"],
        0,
    );
}

#[test]
fn golden_pipelines() {
    golden("pipeline_n2_m3.json", &["--json", "pipeline", "--id", "n2-m3"], 0);
    golden("pipeline_n3_m2.json", &["--json", "pipeline", "--id", "n3-m2", "--multiples", "2"], 0);
    golden("pipeline_n4_m2.json", &["--json", "pipeline", "--id", "n4-m2"], 0);
}

#[test]
fn golden_search() {
    golden("search_n3.jsonl", &["--json", "search", "--n", "3", "--xy", "20", "--wz", "400"], 0);
}

#[test]
fn golden_curve_info() {
    golden(
        "curve_info.json",
        &["--json", "curve-info", "--a2", "0", "--a4", "0", "--a6", "17", "--point", "-2,3", "--multiples", "3"],
        0,
    );
}

#[test]
fn golden_claims() {
    golden("claims.json", &["--json", "claims"], 0);
}

#[test]
fn baseline_matches_committed_file() {
    let out = dio(&["claims", "--baseline"]);
    assert_eq!(out.status.code(), Some(0));
    let committed = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("claims.json")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim_end(), committed.trim_end());
}

#[test]
fn exit_codes() {
    assert_eq!(dio(&["verify", "--n", "3", "--x", "6", "--y", "2", "--w", "48", "--z", "40"]).status.code(), Some(0));
    assert_eq!(dio(&["verify", "--n", "3", "--x", "6", "--y", "2", "--w", "48", "--z", "39"]).status.code(), Some(1));
    assert_eq!(dio(&["pipeline", "--id", "n3-m2", "--seed", "lead-square"]).status.code(), Some(1));
    assert_eq!(dio(&["search", "--n", "2", "--xy", "100000", "--wz", "1"]).status.code(), Some(1));
    assert_eq!(dio(&["family", "--id", "no-such-family", "--a", "1"]).status.code(), Some(2));
    assert_eq!(dio(&["--frobnicate"]).status.code(), Some(2));
    assert_eq!(dio(&["--help"]).status.code(), Some(0));
}

#[test]
fn errors_go_to_stderr() {
    let out = dio(&["pipeline", "--id", "n3-m2", "--seed", "lead-square"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
}

fn word() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("verify".to_string()),
        Just("family".to_string()),
        Just("search".to_string()),
        Just("curve-info".to_string()),
        Just("--n".to_string()),
        Just("--id".to_string()),
        Just("--json".to_string()),
        Just("--x".to_string()),
        Just("--a".to_string()),
        "-?[0-9]{1,3}",
        "--[a-z]{1,6}",
        "[a-z0-9,:-]{0,8}",
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exit_code_is_always_in_contract(args in prop::collection::vec(word(), 0..7)) {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let code = dio(&args).status.code();
        prop_assert!(matches!(code, Some(0..=2)), "{args:?} exited with {code:?}");
    }

    #[test]
    fn unknown_flags_are_usage_errors(flag in "--zz[a-z]{1,8}") {
        prop_assert_eq!(dio(&["verify", &flag]).status.code(), Some(2));
    }
}
