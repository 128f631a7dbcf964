//! End-to-end runs of the `algkit` binary: exit codes, stdin, output files
//! and report formats.

mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn algkit() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_algkit"));
    cmd.env_remove("ALGKIT_THREADS");
    cmd
}

fn doc(name: &str) -> String {
    common::gallery().join(name).display().to_string()
}

fn bound(cmd: &mut Command) -> &mut Command {
    for b in common::BINDINGS {
        cmd.arg("--set").arg(b);
    }
    cmd
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

#[test]
fn every_matrix_entry_exits_as_expected() {
    for inv in common::matrix() {
        let (code, _, err) = common::run(&inv, 1);
        assert_eq!(code, inv.exit, "{:?}: {}", inv.args, String::from_utf8_lossy(&err));
    }
}

#[test]
fn failing_check_names_the_first_tuple() {
    let out = bound(&mut algkit()).args(["check", &doc("fourdim-poisson-corrupt.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["status"], "fails");
    let failing: Vec<&Value> =
        r["sections"][0]["identities"].as_array().unwrap().iter().filter(|i| i["holds"] == false).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["name"], "leibniz");
    assert_eq!(failing[0]["counterexample"]["tuple"], serde_json::json!(["e1", "e4", "e4"]));
}

#[test]
fn text_report_lists_each_identity() {
    let out = bound(&mut algkit()).args(["--text", "check", &doc("fourdim-poisson-corrupt.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stderr).unwrap();
    assert!(text.contains("  ok    jacobi (64 tuples)"), "{text}");
    assert!(text.contains("  FAIL  leibniz at (e1, e4, e4): lhs = e3 + e4, rhs = 2*e4"), "{text}");
    assert!(text.ends_with("overall: fails\n"), "{text}");
}

#[test]
fn structural_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad_json = dir.path().join("bad.json");
    std::fs::write(&bad_json, "{ not json").unwrap();
    let text = std::fs::read_to_string(doc("fourdim-poisson.json")).unwrap();
    let unknown_kind = dir.path().join("kind.json");
    std::fs::write(&unknown_kind, text.replace("\"kind\": \"poisson\"", "\"kind\": \"octonion\"")).unwrap();

    let cases: Vec<(Vec<String>, bool)> = vec![
        (vec!["check".into(), doc("fourdim-poisson.json")], false),
        (vec!["check".into(), bad_json.display().to_string()], true),
        (vec!["check".into(), unknown_kind.display().to_string()], true),
        (vec!["check".into(), doc("N.json")], true),
        (vec!["check".into(), dir.path().join("missing.json").display().to_string()], true),
        (vec!["frobnicate".into()], false),
        (vec!["--threads".into(), "0".into(), "check".into(), doc("fourdim-poisson.json")], true),
    ];
    for (args, bind) in cases {
        let mut cmd = algkit();
        if bind {
            bound(&mut cmd);
        }
        let out = cmd.args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn duplicate_or_malformed_bindings_exit_2() {
    for sets in [["a=1", "a=2"], ["a=1", "b"], ["a=1", "b=1/0"]] {
        let out = algkit()
            .args(["--set", sets[0], "--set", sets[1], "check", &doc("fourdim-poisson.json")])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(2), "{sets:?}");
    }
}

#[test]
fn induced_document_pipes_through_stdin() {
    let induced = bound(&mut algkit())
        .args(["induce", &doc("fourdim-poisson.json"), &doc("N.json"), "--via", "nijenhuis"])
        .output()
        .unwrap();
    assert_eq!(induced.status.code(), Some(0));
    let mut child = algkit()
        .args(["check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&induced.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    assert_eq!(r["status"], "holds");
    assert_eq!(r["sections"][0]["subject"], "ns-poisson structure");
}

#[test]
fn out_and_report_files_replace_the_streams() {
    let dir = tempfile::tempdir().unwrap();
    let (out_path, report_path) = (dir.path().join("induced.json"), dir.path().join("report.json"));
    let out = bound(&mut algkit())
        .arg("--out")
        .arg(&out_path)
        .args(["induce", &doc("fourdim-poisson.json"), &doc("N.json"), "--via", "nijenhuis"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let induced: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(induced["doc"], "algebra");
    assert_eq!(induced["kind"], "ns-poisson");

    let checked = algkit().arg("--report").arg(&report_path).arg("check").arg(&out_path).output().unwrap();
    assert_eq!(checked.status.code(), Some(0));
    assert!(checked.stdout.is_empty() && checked.stderr.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(r["doc"], "report");
    assert_eq!(r["status"], "holds");
}

#[test]
fn non_strict_reynolds_induction_still_emits_the_document() {
    let args = ["induce", &doc("reynolds-algebra.json"), &doc("reynolds-operator.json"), "--via", "reynolds"];
    let strict = algkit().args(["--set", "a=1"]).args(args).output().unwrap();
    assert_eq!(strict.status.code(), Some(1));
    assert!(strict.stdout.is_empty());
    let loose = algkit().args(["--set", "a=1", "--no-strict"]).args(args).output().unwrap();
    assert_eq!(loose.status.code(), Some(0));
    assert!(!loose.stdout.is_empty());
}

#[test]
fn thread_count_from_the_environment_does_not_change_output() {
    let run = |threads: Option<&str>| {
        let mut cmd = algkit();
        if let Some(t) = threads {
            cmd.env("ALGKIT_THREADS", t);
        }
        let out = bound(&mut cmd).args(["hierarchy", &doc("fourdim-poisson.json"), &doc("N.json")]).output().unwrap();
        (out.status.code(), out.stdout, out.stderr)
    };
    let base = run(None);
    assert_eq!(base.0, Some(0));
    assert_eq!(run(Some("1")), base);
    assert_eq!(run(Some("4")), base);
    assert_eq!(run(Some("0")).0, Some(2));
}

#[test]
fn version_flag_succeeds() {
    let out = algkit().arg("--version").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("algkit "));
}
