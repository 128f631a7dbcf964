//! Frozen gallery documents must equal what the test constructors
//! serialize to. Run with `ALGKIT_BLESS=1` to rewrite them.

use std::path::PathBuf;

use algkit::cocycles::{CocyclePair, Representation};
use algkit::deformations::split_by_operator;
use algkit::io::{parse_document, serialize_document, Bindings, Document};
use algkit::{Matrix, Presentation};
use algkit_testkit::examples::*;
use algkit_testkit::search::{filtration_search, flag3, ns_pre_lie_deformation_search};

fn gallery() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../gallery")
}

fn operator(a: &Presentation, m: Matrix) -> Document {
    Document::Operator {
        space: a.space().clone(),
        matrix: m,
    }
}

/// `(e4, e4) ↦ e4` added to the four-dimensional Poisson algebra at
/// `a = b = 1`; Leibniz then fails at `(e1, e4, e4)`.
pub fn corrupt_poisson() -> Presentation {
    let a = poisson4(&q(1), &q(1));
    let mut dot = a.product(algkit::Slot::Dot).clone();
    dot.set(3, 3, 3, q(1));
    a.with_product(algkit::Slot::Dot, dot).unwrap()
}

fn frozen() -> Vec<(&'static str, Document)> {
    let g = exterior_gerstenhaber();
    let qp = quantum_plane(2);
    let p4 = poisson4(&q(1), &q(1));
    let tp = truncated_polynomials(4);
    vec![
        ("exterior-gerstenhaber.json", Document::GradedAlgebra(g.clone())),
        (
            "two-times-identity.json",
            Document::Operator {
                space: g.space().clone(),
                matrix: Matrix::scalar(g.dim(), q(2)),
            },
        ),
        ("quantum-plane.json", Document::Deformation(qp.clone())),
        ("quantum-plane-ns.json", Document::Deformation(split_by_operator(&qp, &Matrix::identity(6)).unwrap())),
        ("ns-pre-lie-deformation.json", Document::Deformation(ns_pre_lie_deformation_search().unwrap().0)),
        ("ns-small.json", Document::Algebra(ns_small())),
        ("ns-small-filtration.json", Document::Filtration(ns_small_filtration())),
        ("ns-small-bad.json", Document::Algebra(ns_small_bad())),
        ("filtration-search.json", Document::Algebra(filtration_search().unwrap().0)),
        ("flag3.json", Document::Filtration(flag3())),
        ("truncated-polynomials-4.json", Document::Algebra(tp.clone())),
        ("euler-4.json", operator(&tp, euler(4))),
        (
            "fourdim-adjoint.json",
            Document::Representation {
                algebra: p4.space().clone(),
                representation: Representation::adjoint(&p4).unwrap(),
            },
        ),
        (
            "fourdim-negated-cocycle.json",
            Document::Cocycle {
                algebra: p4.space().clone(),
                module: p4.space().clone(),
                pair: CocyclePair::negated_products(&p4).unwrap(),
            },
        ),
        ("fourdim-identity.json", operator(&p4, Matrix::identity(4))),
        ("fourdim-poisson-corrupt.json", Document::Algebra(corrupt_poisson())),
    ]
}

#[test]
fn frozen_documents_match_their_constructors() {
    let bless = std::env::var_os("ALGKIT_BLESS").is_some();
    for (file, doc) in frozen() {
        let path = gallery().join(file);
        let text = serialize_document(&doc);
        if bless {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let shipped = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{file}: {e}"));
        assert_eq!(shipped, text, "{file} is stale; rerun with ALGKIT_BLESS=1");
        let parsed = parse_document(&shipped, &Bindings::new()).unwrap();
        assert_eq!(serialize_document(&parsed), text, "{file} does not round-trip");
    }
}

#[test]
fn every_gallery_document_parses() {
    let bindings: Bindings = ["a=1", "b=1", "r=2", "s=1", "t=3"]
        .iter()
        .map(|s| algkit::io::parse_binding(s).unwrap())
        .collect();
    let mut n = 0;
    for entry in std::fs::read_dir(gallery()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let text = std::fs::read_to_string(&path).unwrap();
            let doc = parse_document(&text, &bindings).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            let again = parse_document(&serialize_document(&doc), &Bindings::new()).unwrap();
            assert_eq!(serialize_document(&again), serialize_document(&doc), "{}", path.display());
            n += 1;
        }
    }
    assert!(n >= 20, "only {n} gallery documents");
}

#[test]
fn corrupt_example_fails_leibniz_first() {
    let r = algkit::verify_structure(&corrupt_poisson());
    let first = r.first_failure().unwrap();
    assert_eq!(first.name, "leibniz");
    assert_eq!(first.counterexample.as_ref().unwrap().labels, ["e1", "e4", "e4"]);
}
