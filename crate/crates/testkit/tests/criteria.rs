use std::path::PathBuf;

use algkit_testkit::criteria::{self, Outcome};

fn assert_recorded(out: Outcome) {
    assert!(out.as_recorded(), "{}\n{}", out.summary(), out.details());
}

#[test]
fn worked_examples_match_the_gallery() {
    let gallery = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../gallery");
    let out = criteria::worked_examples(&gallery);
    assert_recorded(out.clone());
    // The Reynolds base algebra and its induced structure at a ≠ 0 fail.
    assert_eq!(out.known.len(), 5);
}

#[test]
fn constructions_hold_across_the_pool() {
    assert_recorded(criteria::construction_replay());
}

#[test]
fn factorizations_round_trip() {
    assert_recorded(criteria::converse_factorization());
}

#[test]
fn nijenhuis_powers_and_sums() {
    assert_recorded(criteria::hierarchy());
}

#[test]
fn semiclassical_limits() {
    assert_recorded(criteria::semiclassical_limits());
}

#[test]
fn filtrations_and_graded_quotients() {
    assert_recorded(criteria::filtration());
}

#[test]
fn graded_structures_and_degree_zero() {
    assert_recorded(criteria::graded());
}

#[test]
fn perturbations_give_genuine_minimal_counterexamples() {
    assert_recorded(criteria::negative_controls());
}

#[test]
fn engine_agrees_with_the_oracle() {
    assert_recorded(criteria::oracle_equivalence());
}

#[test]
fn reynolds_failure_table_is_exact() {
    use algkit_testkit::examples::{q, reynolds4, reynolds_poisson4};
    let base = reynolds_poisson4();
    assert_eq!(criteria::failures(&algkit::verify_structure(&base)), criteria::reynolds_base_failures());
    let induced = algkit::operators::induce_from_reynolds(&base, &reynolds4(&q(0)), false).unwrap();
    assert!(algkit::verify_structure(&induced).holds());
}
