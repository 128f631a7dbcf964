use algkit::operators::{induce_from_nijenhuis, induce_from_reynolds, verify_nijenhuis, verify_reynolds};
use algkit::verify_structure;
use algkit_testkit::examples::*;
use algkit_testkit::oracle::agree_with_engine;

fn show(r: &algkit::VerificationReport) -> String {
    r.results
        .iter()
        .filter_map(|x| x.counterexample.as_ref().map(|c| format!("{} at {:?}", x.name, c.labels)))
        .collect::<Vec<_>>()
        .join("; ")
}

#[test]
fn poisson4_nijenhuis_induces_the_listed_products() {
    let (a, b, r, s, t) = (q(1), q(0), q(2), q(1), q(3));
    let p = poisson4(&a, &b);
    let n = nijenhuis4(&r, &s, &t);
    assert!(verify_structure(&p).holds(), "{}", show(&verify_structure(&p)));
    let nr = verify_nijenhuis(&p, &n).unwrap();
    assert!(nr.holds(), "{}", show(&nr));
    let induced = induce_from_nijenhuis(&p, &n, true).unwrap();
    assert!(same_products(&induced, &poisson4_induced(&a, &b, &r, &s, &t)));
    let rep = verify_structure(&induced);
    assert!(rep.holds(), "{}", show(&rep));
    agree_with_engine(&induced).unwrap();
}

#[test]
fn reynolds4_operator_holds_and_table_matches_but_base_is_not_poisson() {
    for a in [q(-3), q(-1), q(0), q(1), q(3), qr(1, 3)] {
        let p = reynolds_poisson4();
        let rr = verify_reynolds(&p, &reynolds4(&a)).unwrap();
        assert!(rr.holds(), "{}", show(&rr));
        let induced = induce_from_reynolds(&p, &reynolds4(&a), false).unwrap();
        assert!(same_products(&induced, &reynolds4_induced(&a)));
        agree_with_engine(&induced).unwrap();
        let bad = reynolds4_with(&a, &(a.clone() / (q(2) + a.clone())));
        assert_eq!(verify_reynolds(&p, &bad).unwrap().holds(), a == q(0));
    }
    let base = verify_structure(&reynolds_poisson4());
    let fail = |n: &str| base.result(n).unwrap().counterexample.as_ref().map(|c| c.labels.clone());
    assert_eq!(fail("jacobi"), Some(vec!["e1".into(), "e2".into(), "e3".into()]));
    assert_eq!(fail("leibniz"), Some(vec!["e1".into(), "e1".into(), "e2".into()]));
    agree_with_engine(&reynolds_poisson4()).unwrap();
}

#[test]
fn fmanifold_examples() {
    let f = fmanifold2(&q(3));
    assert!(verify_structure(&f).holds(), "{}", show(&verify_structure(&f)));
    agree_with_engine(&f).unwrap();
    let as_poisson = f.retag(algkit::Kind::Poisson).unwrap();
    assert!(!verify_structure(&as_poisson).holds());
    let n = nijenhuis2(&q(2), &q(5));
    assert!(verify_nijenhuis(&f, &n).unwrap().holds());
    let induced = induce_from_nijenhuis(&f, &n, true).unwrap();
    let rep = verify_structure(&induced);
    assert!(rep.holds(), "{}", show(&rep));
    agree_with_engine(&induced).unwrap();
    let ns = nsfmanifold3(&q(7));
    let rep = verify_structure(&ns);
    assert!(rep.holds(), "{}", show(&rep));
    agree_with_engine(&ns).unwrap();
}
