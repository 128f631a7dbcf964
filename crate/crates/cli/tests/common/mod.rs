//! The CLI command matrix shared by the determinism checks.

use std::path::PathBuf;
use std::process::Command;

pub fn gallery() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../gallery")
}

pub struct Invocation {
    pub args: Vec<String>,
    pub exit: i32,
}

/// Output of one run: exit code, stdout, stderr.
pub type Run = (i32, Vec<u8>, Vec<u8>);

fn inv(exit: i32, words: &[&str]) -> Invocation {
    let g = gallery();
    let args = words
        .iter()
        .map(|w| if w.ends_with(".json") { g.join(w).display().to_string() } else { w.to_string() })
        .collect();
    Invocation { args, exit }
}

/// Every subcommand at least once, on the shipped documents.
pub fn matrix() -> Vec<Invocation> {
    vec![
        inv(0, &["check", "fourdim-poisson.json"]),
        inv(1, &["check", "fourdim-poisson-corrupt.json"]),
        inv(1, &["check", "reynolds-algebra.json"]),
        inv(1, &["--text", "check", "reynolds-algebra.json"]),
        inv(0, &["check", "fourdim-ns-poisson.json"]),
        inv(0, &["check", "exterior-gerstenhaber.json"]),
        inv(0, &["check", "quantum-plane.json"]),
        inv(0, &["check", "quantum-plane-ns.json"]),
        inv(0, &["check", "ns-pre-lie-deformation.json"]),
        inv(0, &["op-check", "fourdim-poisson.json", "N.json", "--as", "nijenhuis"]),
        inv(1, &["op-check", "fourdim-poisson.json", "N.json", "--as", "reynolds"]),
        inv(0, &["op-check", "reynolds-algebra.json", "reynolds-operator.json", "--as", "reynolds"]),
        inv(0, &["op-check", "truncated-polynomials-4.json", "euler-4.json", "--as", "derivation"]),
        inv(0, &["op-check", "exterior-gerstenhaber.json", "two-times-identity.json", "--as", "nijenhuis"]),
        inv(0, &["induce", "fourdim-poisson.json", "N.json", "--via", "nijenhuis"]),
        inv(1, &["induce", "reynolds-algebra.json", "reynolds-operator.json", "--via", "reynolds"]),
        inv(0, &["--no-strict", "induce", "reynolds-algebra.json", "reynolds-operator.json", "--via", "reynolds"]),
        inv(0, &["induce", "exterior-gerstenhaber.json", "two-times-identity.json", "--via", "nijenhuis"]),
        inv(0, &["deform-by", "fourdim-poisson.json", "N.json"]),
        inv(0, &["subadjacent", "fourdim-ns-poisson.json"]),
        inv(0, &["hierarchy", "fourdim-poisson.json", "N.json"]),
        inv(0, &["hierarchy", "fourdim-poisson.json", "N.json", "--powers", "1,4"]),
        inv(0, &["rep-check", "fourdim-poisson.json", "fourdim-adjoint.json"]),
        inv(0, &["cocycle-check", "fourdim-poisson.json", "fourdim-adjoint.json", "fourdim-negated-cocycle.json"]),
        inv(0, &[
            "twisted-check",
            "fourdim-poisson.json",
            "fourdim-adjoint.json",
            "fourdim-negated-cocycle.json",
            "fourdim-identity.json",
        ]),
        inv(0, &[
            "twisted-induce",
            "fourdim-poisson.json",
            "fourdim-adjoint.json",
            "fourdim-negated-cocycle.json",
            "fourdim-identity.json",
        ]),
        inv(0, &["factorize", "fourdim-ns-poisson.json"]),
        inv(0, &["limit", "quantum-plane.json"]),
        inv(0, &["limit", "quantum-plane-ns.json"]),
        inv(0, &["limit", "ns-pre-lie-deformation.json"]),
        inv(0, &["filtration-check", "ns-small.json", "ns-small-filtration.json"]),
        inv(1, &["filtration-check", "ns-small-bad.json", "ns-small-filtration.json"]),
        inv(0, &["grade", "ns-small.json", "ns-small-filtration.json"]),
        inv(0, &["grade", "filtration-search.json", "flag3.json"]),
        inv(0, &["embed", "filtration-search.json", "--as", "ns-pre-lie"]),
        inv(0, &["defects", "ns-fmanifold3.json"]),
        inv(2, &["defects", "fmanifold2.json"]),
        inv(0, &["hm", "fmanifold2.json"]),
        inv(0, &["induced-rep", "fourdim-ns-poisson.json"]),
        inv(2, &["check", "N.json"]),
    ]
}

/// Parameter values bound on every run; documents ignore the ones they do
/// not declare.
pub const BINDINGS: [&str; 5] = ["a=1", "b=1", "r=2", "s=1", "t=3"];

pub fn run(inv: &Invocation, threads: usize) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_algkit"));
    cmd.env_remove("ALGKIT_THREADS").arg("--threads").arg(threads.to_string());
    for b in BINDINGS {
        cmd.arg("--set").arg(b);
    }
    let out = cmd.args(&inv.args).output().expect("running algkit");
    (out.status.code().unwrap_or(-1), out.stdout, out.stderr)
}

/// Runs the matrix at 1, 2 and 8 threads plus a repeat at 1, and reports
/// the first invocation whose bytes or exit code differ.
#[allow(dead_code)]
pub fn determinism() -> Result<usize, String> {
    let m = matrix();
    for i in &m {
        let first = run(i, 1);
        if first.0 != i.exit {
            return Err(format!(
                "{:?}: exit {} instead of {}: {}",
                i.args,
                first.0,
                i.exit,
                String::from_utf8_lossy(&first.2)
            ));
        }
        for t in [1, 2, 8] {
            if run(i, t) != first {
                return Err(format!("{:?}: output differs at {t} threads", i.args));
            }
        }
    }
    Ok(m.len())
}
