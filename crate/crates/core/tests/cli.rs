use std::process::{Command, Output};

use gr_verify::verifier::{catalog, parse, Overall, Status};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn full_run_passes() {
    let o = verify(&[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let table = stdout(&o);
    for c in catalog() {
        assert!(table.contains(c.id), "missing row {}", c.id);
    }
    assert!(String::from_utf8_lossy(&o.stderr).contains("overall: pass"));
}

#[test]
fn list_prints_catalog() {
    let o = verify(&["--list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), catalog().len());
    assert!(text.lines().next().unwrap().starts_with("constants"));
}

#[test]
fn json_report_parses() {
    let o = verify(&["--json", "--only", "R0,R12,chain"]);
    assert_eq!(o.status.code(), Some(0));
    let report = parse(&stdout(&o)).expect("valid report");
    assert_eq!(report.overall, Overall::Pass);
    let ids: Vec<&str> = report.records.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, ["R0", "R12", "chain"]);
    let r12 = report.record("R12").unwrap();
    assert_eq!(r12.status, Status::Pass);
    assert!((r12.lhs - 0.666_377_114_268_834).abs() < 1e-14);
}

#[test]
fn unknown_id_is_usage_error() {
    let o = verify(&["--only", "R13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_tolerances_are_usage_errors() {
    for args in [&["--tol", "-1"][..], &["--tol", "abc"], &["--series-tol", "0"], &["--jobs", "0"]] {
        assert_eq!(verify(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn starved_budget_fails() {
    let o = verify(&["--only", "R0", "--max-evals", "20"]);
    assert_eq!(o.status.code(), Some(1));
}
