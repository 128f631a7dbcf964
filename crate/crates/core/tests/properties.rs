use algkit::io::{parse_binding, parse_document, serialize_document, Bindings, Document};
use algkit::scalar::format_scalar;
use algkit::structures::evaluate_law;
use algkit::{verify_structure, Kind, Presentation, Product, Scalar, Slot, Space};
use num_bigint::BigInt;
use proptest::prelude::*;

fn scalar(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse products with small rational entries.
fn product(n: usize) -> impl Strategy<Value = Product> {
    prop::collection::vec(((0..n, 0..n, 0..n), -3i64..=3, 1i64..=3), 0..8).prop_map(move |entries| {
        let mut p = Product::square(n);
        for ((i, j, k), num, den) in entries {
            p.set(i, j, k, scalar(num, den));
        }
        p
    })
}

fn presentation() -> impl Strategy<Value = Presentation> {
    let kinds = prop::sample::select(vec![
        Kind::Associative,
        Kind::CommutativeAssociative,
        Kind::Lie,
        Kind::Poisson,
        Kind::NsPoisson,
        Kind::NsAssociative,
        Kind::FManifold,
    ]);
    (kinds, 1usize..=3).prop_flat_map(|(kind, n)| {
        let slots = kind.slots().len();
        prop::collection::vec(product(n), slots).prop_map(move |ps| {
            Presentation::new(kind, Space::standard(n), kind.slots().iter().copied().zip(ps)).unwrap()
        })
    })
}

/// Lexicographically first tuple where the law fails, by plain scanning.
fn first_failure(a: &Presentation, name: &str, arity: usize) -> Option<Vec<usize>> {
    let n = a.dim();
    let total = n.pow(arity as u32);
    (0..total).find_map(|mut code| {
        let mut t = vec![0; arity];
        for slot in (0..arity).rev() {
            t[slot] = code % n;
            code /= n;
        }
        let (l, r) = evaluate_law(a, name, &t)?;
        (l != r).then_some(t)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_round_trip(a in presentation()) {
        let text = serialize_document(&Document::Algebra(a.clone()));
        let back = match parse_document(&text, &Bindings::new()).unwrap() {
            Document::Algebra(b) => b,
            d => panic!("parsed as {}", d.tag()),
        };
        prop_assert_eq!(back.kind(), a.kind());
        prop_assert!(back.products().eq(a.products()));
        prop_assert_eq!(serialize_document(&Document::Algebra(back)), text);
    }

    #[test]
    fn counterexamples_are_the_first_failing_tuple(a in presentation()) {
        let r = verify_structure(&a);
        for id in &r.results {
            let arity = id.counterexample.as_ref().map_or(0, |c| c.tuple.len());
            if let Some(c) = &id.counterexample {
                prop_assert_ne!(&c.lhs, &c.rhs);
                prop_assert_eq!(first_failure(&a, &id.name, arity), Some(c.tuple.clone()));
            }
        }
    }

    #[test]
    fn symmetrized_products_are_commutative(p in product(3)) {
        let sym = p.add(&p.flip().unwrap()).unwrap();
        let a = Presentation::new(Kind::CommutativeAssociative, Space::standard(3), [(Slot::Dot, sym)]).unwrap();
        prop_assert!(verify_structure(&a).result("commutativity").unwrap().holds());
        let skew = p.sub(&p.flip().unwrap()).unwrap();
        let l = Presentation::new(Kind::Lie, Space::standard(3), [(Slot::Bracket, skew)]).unwrap();
        prop_assert!(verify_structure(&l).result("skew-symmetry").unwrap().holds());
    }

    #[test]
    fn flipping_an_asymmetric_product_breaks_commutativity(p in product(3)) {
        let a = Presentation::new(Kind::CommutativeAssociative, Space::standard(3), [(Slot::Dot, p.clone())]).unwrap();
        let holds = verify_structure(&a).result("commutativity").unwrap().holds();
        prop_assert_eq!(holds, p.is_symmetric());
    }

    #[test]
    fn bindings_round_trip(n in -50i64..50, d in 1i64..20) {
        let s = scalar(n, d);
        let (name, v) = parse_binding(&format!("x={}", format_scalar(&s))).unwrap();
        prop_assert_eq!(name, "x");
        prop_assert_eq!(v, s);
    }
}
