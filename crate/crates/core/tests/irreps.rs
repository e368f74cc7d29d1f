use schwinger_core::operator::k_minus;
use schwinger_core::su3::{
    coefficient_big_l, coefficient_l, dimension, gram_rank, irrep_explicit, irrep_isb,
    projection_apply, sp2r_weight, tower_state, trace_contract, IsbOperators,
};
use schwinger_core::{
    inner_product, FockMonomial, IrrepRequest, IrrepState, Method, Rational, StateVector,
};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d).unwrap()
}

fn req(u: &[u8], l: &[u8]) -> IrrepRequest {
    IrrepRequest::from_indices(u.to_vec(), l.to_vec()).unwrap()
}

fn mono(a: [u32; 3], b: [u32; 3]) -> FockMonomial {
    FockMonomial::new(a, b)
}

/// `a†^α b†_β − (δ/3) a†·b†` written out by hand.
fn octet(al: usize, be: usize) -> StateVector<Rational> {
    let mut a = [0; 3];
    let mut b = [0; 3];
    a[al - 1] = 1;
    b[be - 1] = 1;
    let mut s = StateVector::monomial(mono(a, b));
    if al == be {
        for g in 0..3 {
            let mut a = [0; 3];
            let mut b = [0; 3];
            a[g] = 1;
            b[g] = 1;
            s.add_term(mono(a, b), -q(1, 3));
        }
    }
    s
}

#[test]
fn octet_components_by_every_method() {
    for al in 1..=3u8 {
        for be in 1..=3u8 {
            let r = req(&[al], &[be]);
            for method in Method::ALL {
                assert_eq!(
                    IrrepState::build(&r, method).vector,
                    octet(al as usize, be as usize),
                    "{r} {method}"
                );
            }
        }
    }
    let s = irrep_isb(&req(&[1], &[1])).vector;
    assert_eq!(inner_product(&s, &s), q(2, 3));
}

#[test]
fn pure_irreps_have_no_contractions() {
    assert_eq!(
        irrep_explicit(&req(&[1], &[])).vector,
        StateVector::monomial(mono([1, 0, 0], [0; 3]))
    );
    assert_eq!(
        projection_apply(&req(&[1, 1], &[])).vector,
        StateVector::monomial(mono([2, 0, 0], [0; 3]))
    );
    assert_eq!(
        irrep_isb(&req(&[2, 3, 3], &[])).vector,
        StateVector::monomial(mono([0, 1, 2], [0; 3]))
    );
}

#[test]
fn three_paths_and_traces_through_n_plus_m_three() {
    let km = k_minus::<Rational>();
    for t in 0..=3 {
        for n in 0..=t {
            let m = t - n;
            for r in IrrepRequest::all(n, m) {
                let e = irrep_explicit(&r);
                assert_eq!(e.vector, projection_apply(&r).vector, "{r}");
                assert_eq!(e.vector, irrep_isb(&r).vector, "{r}");
                assert!(km.apply(&e.vector).is_zero(), "{r}");
                for l in 1..=n {
                    for k in 1..=m {
                        assert!(trace_contract(&e, l, k).unwrap().is_zero(), "{r} ({l},{k})");
                    }
                }
            }
        }
    }
}

#[test]
fn contraction_coefficients() {
    assert_eq!(coefficient_big_l(1, 1, 1).unwrap(), q(-1, 3));
    assert_eq!(coefficient_big_l(1, 2, 1).unwrap(), q(-1, 4));
    assert_eq!(coefficient_big_l(2, 2, 2).unwrap(), q(1, 20));
    assert!(coefficient_big_l(0, 2, 2).is_err());
    assert!(coefficient_big_l(3, 2, 2).is_err());
    assert_eq!(coefficient_l(0, 4, 1), q(1, 1));
    assert_eq!(coefficient_l(1, 1, 1), q(-1, 3));
    assert_eq!(coefficient_l(2, 2, 2), q(1, 40));
}

#[test]
fn isb_annihilators() {
    let ops = IsbOperators::<Rational>::new();
    assert!(ops.a(1).apply(&StateVector::vacuum()).is_zero());
    // k₋ has nothing to contract in a†¹b†₂, so only the bare b² survives
    let s = StateVector::monomial(mono([1, 0, 0], [0, 1, 0]));
    assert_eq!(
        ops.b(2).apply(&s),
        StateVector::monomial(mono([1, 0, 0], [0; 3]))
    );
    // with a matching pair the dressing term contributes −1/3
    let s = StateVector::monomial(mono([0, 1, 0], [0, 1, 0]));
    assert_eq!(
        ops.b(2).apply(&s),
        StateVector::from_term(mono([0, 1, 0], [0; 3]), q(2, 3))
    );
}

#[test]
fn towers_and_dimensions() {
    let o = req(&[1], &[1]);
    for rho in 0..=3 {
        let w = sp2r_weight(&tower_state(&o, rho)).unwrap();
        assert_eq!(w.k, q(5, 2));
        assert_eq!(w.m_prime, q(5 + 2 * rho as i64, 2));
    }
    for (n, m, d) in [(1, 0, 3), (0, 1, 3), (1, 1, 8), (2, 1, 15), (2, 2, 27)] {
        assert_eq!(dimension(n, m), d);
        assert_eq!(gram_rank(n, m, 4).unwrap(), d);
    }
}

#[test]
fn irrep_state_json_shape() {
    let s = irrep_isb(&req(&[1], &[2]));
    let v = serde_json::to_value(&s).unwrap();
    assert_eq!(
        v,
        serde_json::json!({
            "label": [1, 1],
            "upper": [1],
            "lower": [2],
            "method": "isb",
            "terms": [{"mono": [[1, 0, 0], [0, 1, 0]], "coeff": "1"}],
        })
    );
}

#[test]
fn malformed_requests() {
    assert!(IrrepRequest::new(2, 0, vec![1], vec![]).is_err());
    assert!(IrrepRequest::new(1, 0, vec![4], vec![]).is_err());
    assert!(IrrepRequest::new(0, 1, vec![], vec![0]).is_err());
}
