use schwinger_core::algebra::{
    verify_casimirs, verify_lie_closure, verify_weyl_gellmann_agreement,
};
use schwinger_core::report::CheckRecord;
use schwinger_core::verify::{sp2r_checks, su2_checks};
use schwinger_core::{ExtScalar, FockMonomial, Rational, StateVector};

fn monomials<S: schwinger_core::Scalar>(max_total: u32) -> Vec<StateVector<S>> {
    FockMonomial::up_to(max_total)
        .into_iter()
        .map(StateVector::monomial)
        .collect()
}

fn all_pass(recs: &[CheckRecord]) {
    assert!(!recs.is_empty());
    for r in recs {
        assert!(r.pass, "{} {:?}", r.id, r.counterexample);
        assert!(r.counterexample.is_none());
    }
}

#[test]
fn sp2r_brackets_and_invariance_up_to_six_quanta() {
    let recs = sp2r_checks(6);
    // three brackets plus [Q^a, k±] for a = 1..8
    assert_eq!(recs.len(), 3 + 16);
    all_pass(&recs);
}

#[test]
fn casimirs_commute_up_to_six_quanta() {
    all_pass(&verify_casimirs(&monomials::<ExtScalar>(6)));
}

#[test]
fn closure_and_basis_agreement_up_to_four_quanta() {
    let ext = monomials::<ExtScalar>(4);
    let rat = monomials::<Rational>(4);
    all_pass(&verify_lie_closure(&ext, &rat));
    all_pass(&verify_weyl_gellmann_agreement(&ext));
}

#[test]
fn su2_up_to_eight_quanta() {
    let recs = su2_checks(8);
    assert_eq!(recs.len(), 9 * 5);
    all_pass(&recs);
}
