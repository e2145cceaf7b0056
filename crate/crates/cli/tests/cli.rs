use std::collections::BTreeMap;

use qdouble::{CheckResult, Status};
use qdouble_cli::{exit_code, run, Entry, RunReport, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

fn run_args(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["qdouble"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn padic_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, out, _) = run_args(&["padic", "--p", "3", "--stages", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let report: RunReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!report.entries.is_empty());
    for e in &report.entries {
        assert_eq!(e.suite, "padic");
        assert_eq!(e.params["p"], "3");
        assert_eq!(e.result.status, Status::Pass, "{:?}", e);
        assert_eq!(e.result.tower.as_deref(), Some("padic-3"));
    }
}

#[test]
fn nonexistence_text() {
    let (code, out, _) = run_args(&["nonexistence", "--n", "4"]);
    assert_eq!(code, EXIT_OK);
    for k in 1..=4 {
        assert!(out.contains(&format!("no group-like binomial for k={k}")), "{out}");
    }
    assert!(out.contains("control admits k=2 with mu=±1"));
}

#[test]
fn axioms_on_doubled_s4() {
    let (code, out, _) = run_args(&["axioms", "--group", "S4", "--double", "flip"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("7 checks: 7 pass, 0 fail, 0 skipped\n"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["padic", "--q", "3"],
        &["axioms", "--group", "Q8"],
        &["padic", "--p", "4"],
        &["nonexistence", "--n", "5"],
        &["axioms", "--group", "S3", "--double", "inverse"],
        &["manifest", "/nonexistent/manifest.json"],
    ] {
        let (code, _, err) = run_args(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run_args(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("nonexistence"));
}

#[test]
fn failures_exit_one() {
    let entry = |r: CheckResult| Entry {
        suite: "x".into(),
        params: BTreeMap::new(),
        result: r,
        details: None,
        elapsed_ms: 0,
    };
    let ok = RunReport { entries: vec![entry(CheckResult::pass("a")), entry(CheckResult::skipped("b", "n"))] };
    assert_eq!(exit_code(&ok), EXIT_OK);
    let bad = RunReport { entries: vec![entry(CheckResult::fail("a", "w"))] };
    assert_eq!(exit_code(&bad), EXIT_CHECK_FAILED);
}

#[test]
fn manifest_runs_in_order_and_repeats() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    std::fs::write(
        &m,
        r#"{"entries":[
            {"suite":"finsym","params":{"l":5}},
            {"suite":"obstruction","params":{"n":2}},
            {"suite":"faithful","params":{"group":"Z3","theta":"id"}}
        ]}"#,
    )
    .unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for out in [&a, &b] {
        let (code, _, err) = run_args(&["manifest", m.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK, "{err}");
    }
    let ra: RunReport = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    let rb: RunReport = serde_json::from_str(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert_eq!(ra.body(), rb.body());
    let suites: Vec<&str> = ra.entries.iter().map(|e| e.suite.as_str()).collect();
    let first_obstruction = suites.iter().position(|s| *s == "obstruction").unwrap();
    assert!(suites[..first_obstruction].iter().all(|s| *s == "finsym"));
    assert_eq!(suites.last(), Some(&"faithful"));
}

#[test]
fn invalid_manifest_entry_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    std::fs::write(&m, r#"{"entries":[{"suite":"finsym","params":{"l":5}},{"suite":"padic","params":{"prime":3}}]}"#).unwrap();
    let (code, _, err) = run_args(&["manifest", m.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("manifest entry 1"), "{err}");
}
