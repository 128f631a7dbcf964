use algkit::{verify_structure, Kind, Presentation, Product, Space};
use algkit_testkit::criteria::degree_zero_matches;
use algkit_testkit::examples::qr;
use algkit_testkit::oracle::agree_with_engine;
use proptest::prelude::*;

fn product(n: usize) -> impl Strategy<Value = Product> {
    prop::collection::vec(((0..n, 0..n, 0..n), -2i64..=2, 1i64..=2), 0..6).prop_map(move |entries| {
        let mut p = Product::square(n);
        for ((i, j, k), num, den) in entries {
            p.set(i, j, k, qr(num, den));
        }
        p
    })
}

fn presentation(kinds: Vec<Kind>) -> impl Strategy<Value = Presentation> {
    (prop::sample::select(kinds), 1usize..=3).prop_flat_map(|(kind, n)| {
        prop::collection::vec(product(n), kind.slots().len()).prop_map(move |ps| {
            Presentation::new(kind, Space::standard(n), kind.slots().iter().copied().zip(ps)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_structures_agree_with_the_oracle(a in presentation(Kind::ALL.to_vec())) {
        prop_assert_eq!(agree_with_engine(&a), Ok(()));
    }

    #[test]
    fn degree_zero_regrading_keeps_verdicts(
        a in presentation(vec![Kind::Poisson, Kind::NsCommutative, Kind::NsLie, Kind::NsPoisson])
    ) {
        prop_assert_eq!(degree_zero_matches(&a), Ok(()));
    }

    #[test]
    fn symmetric_part_of_a_commutative_product_is_kept(p in product(3)) {
        let sym = p.add(&p.flip().unwrap()).unwrap();
        let a = Presentation::new(Kind::CommutativeAssociative, Space::standard(3), [(algkit::Slot::Dot, sym)]).unwrap();
        let r = verify_structure(&a);
        prop_assert!(r.result("commutativity").unwrap().holds());
        prop_assert_eq!(agree_with_engine(&a), Ok(()));
    }
}
