use algkit_testkit::fixtures::every_kind;
use algkit_testkit::oracle;

#[test]
fn every_kind_has_a_valid_instance() {
    for (kind, a) in every_kind() {
        assert_eq!(a.kind(), kind);
        let fails: Vec<_> = oracle::verify_presentation(&a).into_iter().filter(|(_, f)| f.is_some()).collect();
        assert!(fails.is_empty(), "{kind}: {fails:?}");
        oracle::agree_with_engine(&a).unwrap_or_else(|e| panic!("{kind}: {e}"));
    }
}
