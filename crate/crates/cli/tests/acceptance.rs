//! Runs the ten acceptance criteria and prints one line per criterion.
//!
//! Exits nonzero when a criterion fails in a way that is not already
//! recorded. The worked Reynolds example is known to fail its structure
//! check; criterion 1 therefore prints FAIL, lists the failing identities,
//! and counts as recorded only when they match the hand-computed table.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use algkit_testkit::criteria::{self, Outcome};

type Suite = Box<dyn Fn() -> Outcome>;

fn main() -> ExitCode {
    let gallery = common::gallery();
    let suites: Vec<(&str, Suite)> = vec![
        ("worked examples", Box::new(move || criteria::worked_examples(&gallery))),
        ("constructions over the pool", Box::new(criteria::construction_replay)),
        ("converse factorization", Box::new(criteria::converse_factorization)),
        ("Nijenhuis hierarchy", Box::new(criteria::hierarchy)),
        ("semi-classical limits", Box::new(criteria::semiclassical_limits)),
        ("filtrations", Box::new(criteria::filtration)),
        ("graded structures", Box::new(criteria::graded)),
        ("negative controls", Box::new(criteria::negative_controls)),
        ("oracle equivalence", Box::new(criteria::oracle_equivalence)),
    ];
    let mut unexpected = false;
    let mut details = String::new();
    for (k, (name, suite)) in suites.iter().enumerate() {
        let start = Instant::now();
        let out = suite();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if out.passed() { "PASS" } else { "FAIL" };
        let note = if !out.passed() && out.as_recorded() { " (matches the recorded analysis)" } else { "" };
        println!("criterion {:>2}  {verdict}  {name}: {}{note} [{secs:.1}s]", k + 1, out.summary());
        if !out.passed() {
            details.push_str(&format!("criterion {}:\n{}", k + 1, out.details()));
        }
        unexpected |= !out.as_recorded();
    }

    let start = Instant::now();
    let det = common::determinism();
    let secs = start.elapsed().as_secs_f64();
    match &det {
        Ok(n) => println!("criterion 10  PASS  determinism: {n} commands identical at 1, 2 and 8 threads [{secs:.1}s]"),
        Err(e) => {
            println!("criterion 10  FAIL  determinism: {e} [{secs:.1}s]");
            unexpected = true;
        }
    }

    if !details.is_empty() {
        println!("\n{details}");
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
