use serde::Serialize;
use serde_json::json;

use super::{irrep_explicit, irrep_isb, IrrepRequest, IrrepState, IsbOperators};
use crate::error::{check_index, Error, Result};
use crate::fock::StateVector;
use crate::linalg::{gram_matrix, rational_rank, SpanBasis};
use crate::operator::{k_minus, k_plus};
use crate::report::{mismatch, CheckRecord};
use crate::scalar::{Rational, Scalar};

/// Sums the states obtained by setting upper slot `l` and lower slot `k`
/// (1-based) to a common `γ = 1, 2, 3`, each built by `build`.
pub fn trace_contract_with(
    req: &IrrepRequest,
    l: usize,
    k: usize,
    build: impl Fn(&IrrepRequest) -> StateVector<Rational>,
) -> Result<StateVector<Rational>> {
    if req.n() == 0 || req.m() == 0 {
        return Err(Error::Domain(format!(
            "trace needs n, m >= 1, got ({}, {})",
            req.n(),
            req.m()
        )));
    }
    check_index("upper slot", l as i64, 1, req.n() as i64)?;
    check_index("lower slot", k as i64, 1, req.m() as i64)?;
    let mut out = StateVector::zero();
    for g in 1..=3u8 {
        let r = req.with_upper(l - 1, g).with_lower(k - 1, g);
        out.add_assign(&build(&r));
    }
    Ok(out)
}

/// The `(l, k)` trace of the family that `state` belongs to, rebuilt with
/// the same method. Vanishes for every valid irrep state.
pub fn trace_contract(state: &IrrepState, l: usize, k: usize) -> Result<StateVector<Rational>> {
    let method = state.method;
    trace_contract_with(&state.request, l, k, |r| {
        IrrepState::build(r, method).vector
    })
}

/// Sp(2,R) labels `|k, m′⟩` of a state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sp2rWeight {
    pub k: Rational,
    pub m_prime: Rational,
}

/// `m′` is the `k₀` eigenvalue `(N_a+N_b+3)/2`. `k = m′ − ρ` where `ρ` is
/// the largest power with `k₋^ρ s ≠ 0`; for `k₊^ρ` applied to an `(n,m)`
/// irrep state this gives `k = (n+m+3)/2`.
pub fn sp2r_weight<S: Scalar>(s: &StateVector<S>) -> Result<Sp2rWeight> {
    let total = s.total_occupation().ok_or_else(|| {
        Error::Domain("state is not a k0 eigenstate (mixed or zero total occupation)".into())
    })?;
    let m_prime = Rational::new(total as i64 + 3, 2).unwrap();
    let km = k_minus::<S>();
    let mut rho = 0i64;
    let mut cur = km.apply(s);
    while !cur.is_zero() {
        rho += 1;
        cur = km.apply(&cur);
    }
    Ok(Sp2rWeight {
        k: m_prime.clone() - Rational::from_int(rho),
        m_prime,
    })
}

/// `(a†·b†)^ρ` applied to the ISB state of `req`.
pub fn tower_state(req: &IrrepRequest, rho: u32) -> StateVector<Rational> {
    k_plus::<Rational>().pow(rho).apply(&irrep_isb(req).vector)
}

/// `(n+1)(m+1)(n+m+2)/2`
pub fn dimension(n: usize, m: usize) -> usize {
    (n + 1) * (m + 1) * (n + m + 2) / 2
}

/// Exact rank of the Gram matrix of all `3^n·3^m` ISB states of `(n, m)`.
pub fn gram_rank(n: usize, m: usize, max_total: usize) -> Result<usize> {
    if n + m > max_total {
        return Err(Error::ResourceBound {
            what: "n + m",
            value: n + m,
            limit: max_total,
        });
    }
    let states: Vec<_> = IrrepRequest::all(n, m)
        .iter()
        .map(|r| irrep_isb(r).vector)
        .collect();
    Ok(rational_rank(&gram_matrix(&states)))
}

/// Echelon basis of the span of all `(n, m)` ISB states over `S`.
pub fn span_basis<S: Scalar>(n: usize, m: usize) -> SpanBasis<S> {
    let states: Vec<StateVector<S>> = IrrepRequest::all(n, m)
        .iter()
        .map(|r| irrep_isb(r).vector.map_scalar(S::from_rational))
        .collect();
    SpanBasis::new(&states)
}

/// `A†^α ψ(n,m) = ψ(n+1,m)` with `α` prepended to the upper indices, and
/// `B†_β ψ(n,m) = ψ(n,m+1)` with `β` prepended to the lower ones, all via
/// the explicit construction.
pub fn ladder_check(n: usize, m: usize) -> Vec<CheckRecord> {
    ladder_check_with(n, m, &IsbOperators::new())
}

pub(crate) fn ladder_check_with(
    n: usize,
    m: usize,
    ops: &IsbOperators<Rational>,
) -> Vec<CheckRecord> {
    let reqs = IrrepRequest::all(n, m);
    let mut out = Vec::new();
    for new in 1..=3u8 {
        let mut fail_a = None;
        let mut fail_b = None;
        for r in &reqs {
            let base = irrep_explicit(r).vector;
            if fail_a.is_none() {
                let mut up = vec![new];
                up.extend_from_slice(r.upper());
                let target = IrrepRequest::from_indices(up, r.lower().to_vec()).unwrap();
                let lhs = ops.a_dagger(new as usize).apply(&base);
                let rhs = irrep_explicit(&target).vector;
                if lhs != rhs {
                    fail_a = Some(
                        json!({"request": r.to_string(), "detail": mismatch(&base, &lhs, &rhs)}),
                    );
                }
            }
            if fail_b.is_none() {
                let mut lo = vec![new];
                lo.extend_from_slice(r.lower());
                let target = IrrepRequest::from_indices(r.upper().to_vec(), lo).unwrap();
                let lhs = ops.b_dagger(new as usize).apply(&base);
                let rhs = irrep_explicit(&target).vector;
                if lhs != rhs {
                    fail_b = Some(
                        json!({"request": r.to_string(), "detail": mismatch(&base, &lhs, &rhs)}),
                    );
                }
            }
        }
        out.push(CheckRecord::from_outcome(
            format!("ladder/A/{n}-{m}/{new}"),
            json!({"n": n, "m": m, "alpha": new, "states": reqs.len()}),
            fail_a,
        ));
        out.push(CheckRecord::from_outcome(
            format!("ladder/B/{n}-{m}/{new}"),
            json!({"n": n, "m": m, "beta": new, "states": reqs.len()}),
            fail_b,
        ));
    }
    out
}
