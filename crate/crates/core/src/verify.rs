//! Verification suites: every operator identity and irrep property,
//! checked exactly on finite test sets bounded by a total occupation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;

use crate::algebra::{
    verify_casimirs, verify_covariance, verify_lie_closure, verify_sp2r_invariance,
    verify_weyl_gellmann_agreement, GellMannTable,
};
use crate::error::{Error, Result};
use crate::fock::{inner_product, FockMonomial, Mode, StateVector};
use crate::linalg::{gram_matrix, rational_rank};
use crate::operator::{commutator, sp2r_triple, LinearOperator, NumberFunction};
use crate::report::{first_mismatch, mismatch, CheckRecord, VerificationReport};
use crate::scalar::{ExtScalar, Rational, Scalar};
use crate::su2::{su2_generators, su2_irrep_state};
use crate::su3::{
    coefficient_big_l, coefficient_l, dimension, irrep_explicit, projection_apply, projector,
    sp2r_weight, span_basis, IrrepRequest, IsbOperators,
};

/// Largest `max_total` any suite accepts.
pub const MAX_TOTAL_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Oscillator,
    Su2,
    Algebra,
    Sp2r,
    Irreps,
    Isb,
    Ladder,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Oscillator,
        Suite::Su2,
        Suite::Algebra,
        Suite::Sp2r,
        Suite::Irreps,
        Suite::Isb,
        Suite::Ladder,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Oscillator => "oscillator",
            Suite::Su2 => "su2",
            Suite::Algebra => "algebra",
            Suite::Sp2r => "sp2r",
            Suite::Irreps => "irreps",
            Suite::Isb => "isb",
            Suite::Ladder => "ladder",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Deliberate defects used as negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fault {
    /// Flips the sign of the dressing term in the ISB operators.
    IsbSign,
    /// Corrupts one Gell-Mann matrix entry.
    GellMannEntry,
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "isb-sign" => Ok(Fault::IsbSign),
            "gellmann-entry" => Ok(Fault::GellMannEntry),
            other => Err(Error::Domain(format!("unknown fault {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_total: usize,
    pub fault: Option<Fault>,
}

impl VerifyConfig {
    pub fn new(max_total: usize) -> Self {
        VerifyConfig {
            max_total,
            fault: None,
        }
    }

    pub fn with_fault(mut self, fault: Fault) -> Self {
        self.fault = Some(fault);
        self
    }

    fn isb(&self) -> IsbOperators<Rational> {
        match self.fault {
            Some(Fault::IsbSign) => IsbOperators::with_dressing(Rational::one()),
            _ => IsbOperators::new(),
        }
    }

    fn gellmann(&self) -> GellMannTable {
        match self.fault {
            Some(Fault::GellMannEntry) => {
                GellMannTable::standard().with_entry(2, 1, 2, ExtScalar::i())
            }
            _ => GellMannTable::standard(),
        }
    }

    fn t(&self) -> u32 {
        self.max_total as u32
    }
}

/// Runs one suite (or all of them) and collects a report.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    if config.max_total > MAX_TOTAL_LIMIT {
        return Err(Error::ResourceBound {
            what: "max-total",
            value: config.max_total,
            limit: MAX_TOTAL_LIMIT,
        });
    }
    let start = Instant::now();
    let checks = match suite {
        Suite::All => Suite::EACH
            .par_iter()
            .map(|s| suite_checks(*s, config))
            .flatten()
            .collect(),
        s => suite_checks(s, config),
    };
    Ok(VerificationReport::new(
        suite.as_str(),
        checks,
        start.elapsed().as_millis(),
    ))
}

fn suite_checks(suite: Suite, config: &VerifyConfig) -> Vec<CheckRecord> {
    let mut out = match suite {
        Suite::Oscillator => oscillator_checks(config.t()),
        Suite::Su2 => su2_checks(2 * config.t()),
        Suite::Algebra => algebra_checks(config),
        Suite::Sp2r => sp2r_checks(config.t()),
        Suite::Irreps => irrep_checks(config),
        Suite::Isb => isb_checks(config),
        Suite::Ladder => ladder_checks(config),
        Suite::All => unreachable!("expanded by run_suite"),
    };
    for r in &mut out {
        r.id = format!("{}/{}", suite.as_str(), r.id);
    }
    out
}

fn monomial_states<S: Scalar>(max_total: u32) -> Vec<StateVector<S>> {
    FockMonomial::up_to(max_total)
        .into_iter()
        .map(StateVector::monomial)
        .collect()
}

/// Adjointness, canonical commutators and commuting ladders.
pub fn oscillator_checks(max_total: u32) -> Vec<CheckRecord> {
    let monos = FockMonomial::up_to(max_total);
    let states: Vec<StateVector<Rational>> =
        monos.iter().map(|m| StateVector::monomial(*m)).collect();
    let modes: Vec<Mode> = Mode::all().collect();
    let mut out = Vec::new();

    for &mu in &modes {
        let mut failure = None;
        'outer: for m in monos.iter().filter(|m| m.total() < max_total) {
            let left = StateVector::<Rational>::monomial(*m);
            for m2 in monos.iter().filter(|x| x.total() == m.total() + 1) {
                let right = StateVector::<Rational>::monomial(*m2);
                let lhs = inner_product(&left.apply_creation(mu), &right);
                let rhs = inner_product(&left, &right.apply_annihilation(mu));
                if lhs != rhs {
                    failure = Some(json!({"bra": m.to_string(), "ket": m2.to_string(),
                                          "lhs": lhs, "rhs": rhs}));
                    break 'outer;
                }
            }
        }
        out.push(CheckRecord::from_outcome(
            format!("adjoint/{mu}"),
            json!({"mode": mu.to_string(), "max_total": max_total}),
            failure,
        ));
    }

    for &mu in &modes {
        for &nu in &modes {
            let ann = LinearOperator::<Rational>::annihilate(mu);
            let cre = LinearOperator::<Rational>::create(nu);
            let ccr = commutator(&ann, &cre);
            let expected = if mu == nu {
                Rational::one()
            } else {
                Rational::zero()
            };
            out.push(CheckRecord::from_outcome(
                format!("ccr/{mu}-{nu}"),
                json!({"annihilate": mu.to_string(), "create": nu.to_string()}),
                first_mismatch(&states, |s| ccr.apply(s), |s| s.scale(&expected)),
            ));
            if mu < nu {
                let cc = commutator(
                    &LinearOperator::<Rational>::create(mu),
                    &LinearOperator::create(nu),
                );
                out.push(CheckRecord::from_outcome(
                    format!("commuting-creation/{mu}-{nu}"),
                    json!({"modes": [mu.to_string(), nu.to_string()]}),
                    first_mismatch(&states, |s| cc.apply(s), |_| StateVector::zero()),
                ));
                let aa = commutator(
                    &LinearOperator::<Rational>::annihilate(mu),
                    &LinearOperator::annihilate(nu),
                );
                out.push(CheckRecord::from_outcome(
                    format!("commuting-annihilation/{mu}-{nu}"),
                    json!({"modes": [mu.to_string(), nu.to_string()]}),
                    first_mismatch(&states, |s| aa.apply(s), |_| StateVector::zero()),
                ));
            }
        }
    }

    let failure = states.iter().find_map(|s| {
        let n = inner_product(s, s);
        (!n.is_positive()).then(|| json!({"state": s, "norm": n}))
    });
    out.push(CheckRecord::from_outcome(
        "norm-positive",
        json!({"max_total": max_total}),
        failure,
    ));
    out
}

/// SU(2) brackets, the two forms of `J²`, eigenvalues and sector ranks.
pub fn su2_checks(max_n: u32) -> Vec<CheckRecord> {
    let g = su2_generators();
    let bil = g.casimir_bilinear();
    let mut out = Vec::new();
    for n in 0..=max_n {
        let sector: Vec<StateVector<Rational>> = crate::su2::su2_sector(n)
            .into_iter()
            .map(StateVector::monomial)
            .collect();
        let c3p = commutator(&g.j_3, &g.j_plus);
        let cpm = commutator(&g.j_plus, &g.j_minus);
        out.push(CheckRecord::from_outcome(
            format!("bracket/J3-J+/{n}"),
            json!({"n": n}),
            first_mismatch(&sector, |s| c3p.apply(s), |s| g.j_plus.apply(s)),
        ));
        out.push(CheckRecord::from_outcome(
            format!("bracket/J+-J-/{n}"),
            json!({"n": n}),
            first_mismatch(
                &sector,
                |s| cpm.apply(s),
                |s| g.j_3.apply(s).scale(&Rational::from_int(2)),
            ),
        ));
        out.push(CheckRecord::from_outcome(
            format!("casimir-forms/{n}"),
            json!({"n": n}),
            first_mismatch(&sector, |s| bil.apply(s), |s| g.casimir.apply(s)),
        ));

        // every tuple in {1,2}^n, not just one per weight
        let tuples = (0..1u32 << n).map(|bits| {
            (0..n)
                .map(|i| if bits >> i & 1 == 1 { 2 } else { 1 })
                .collect::<Vec<u8>>()
        });
        let mut states = Vec::new();
        let jj = Rational::new(n as i64 * (n as i64 + 2), 4).unwrap();
        let mut eigen_failure = None;
        for t in tuples {
            let st = su2_irrep_state(&t).expect("indices in 1..=2");
            for op in [&g.casimir, &bil] {
                let img = op.apply(&st.vector);
                if eigen_failure.is_none() && img != st.vector.scale(&jj) {
                    eigen_failure = Some(mismatch(&st.vector, &img, &st.vector.scale(&jj)));
                }
            }
            // permuted tuples give the same vector; the rank needs one copy
            if !states.contains(&st.vector) {
                states.push(st.vector);
            }
        }
        out.push(CheckRecord::from_outcome(
            format!("eigenvalue/{n}"),
            json!({"n": n, "j(j+1)": jj}),
            eigen_failure,
        ));
        let rank = rational_rank(&gram_matrix(&states));
        out.push(CheckRecord::from_outcome(
            format!("gram-rank/{n}"),
            json!({"n": n, "expected": n + 1}),
            (rank != n as usize + 1).then(|| json!({"rank": rank})),
        ));
    }
    out
}

fn algebra_checks(config: &VerifyConfig) -> Vec<CheckRecord> {
    let ext = monomial_states::<ExtScalar>(config.t());
    let rat = monomial_states::<Rational>(config.t());
    let gens = config.gellmann().generators();
    let mut out = verify_covariance(&gens, &ext);
    out.extend(verify_lie_closure(&ext, &rat));
    out.extend(verify_casimirs(&ext));
    out.extend(verify_weyl_gellmann_agreement(&ext));
    out
}

/// The three Sp(2,R) brackets and SU(3) invariance of `k±`.
pub fn sp2r_checks(max_total: u32) -> Vec<CheckRecord> {
    let rat = monomial_states::<Rational>(max_total);
    let k = sp2r_triple::<Rational>();
    let two = Rational::from_int(2);
    let mut out = Vec::new();
    let c = commutator(&k.k_minus, &k.k_plus);
    out.push(CheckRecord::from_outcome(
        "bracket/k- k+ = 2k0",
        json!({"max_total": max_total}),
        first_mismatch(&rat, |s| c.apply(s), |s| k.k_zero.apply(s).scale(&two)),
    ));
    let c = commutator(&k.k_zero, &k.k_plus);
    out.push(CheckRecord::from_outcome(
        "bracket/k0 k+ = k+",
        json!({"max_total": max_total}),
        first_mismatch(&rat, |s| c.apply(s), |s| k.k_plus.apply(s)),
    ));
    let c = commutator(&k.k_zero, &k.k_minus);
    out.push(CheckRecord::from_outcome(
        "bracket/k0 k- = -k-",
        json!({"max_total": max_total}),
        first_mismatch(&rat, |s| c.apply(s), |s| k.k_minus.apply(s).neg()),
    ));
    let ext = monomial_states::<ExtScalar>(max_total);
    out.extend(verify_sp2r_invariance(&ext));
    out
}

fn sectors(max_total: usize) -> Vec<(usize, usize)> {
    (0..=max_total)
        .flat_map(|t| (0..=t).map(move |n| (n, t - n)))
        .collect()
}

/// Three-path equality, C1–C3, projector idempotence, coefficient
/// identities, span dimensions, generator closure and tower labels.
fn irrep_checks(config: &VerifyConfig) -> Vec<CheckRecord> {
    let ops = config.isb();
    let mut out: Vec<CheckRecord> = sectors(config.max_total)
        .par_iter()
        .map(|&(n, m)| irrep_sector_checks(n, m, &ops))
        .flatten()
        .collect();
    out.extend(coefficient_checks());
    out.extend(
        sectors(config.max_total.min(4))
            .par_iter()
            .map(|&(n, m)| span_checks(n, m, &ops))
            .flatten()
            .collect::<Vec<_>>(),
    );
    out.extend(tower_checks(config.max_total.min(2)));
    out
}

fn irrep_sector_checks(n: usize, m: usize, ops: &IsbOperators<Rational>) -> Vec<CheckRecord> {
    let reqs = IrrepRequest::all(n, m);
    let km = crate::operator::k_minus::<Rational>();
    let proj = projector(n, m);
    let mut explicit: HashMap<&IrrepRequest, StateVector<Rational>> = HashMap::new();
    let mut three_path = None;
    let mut annihilated = None;
    let mut idempotent = None;
    let mut homogeneous = None;
    for r in &reqs {
        let e = irrep_explicit(r).vector;
        let p = projection_apply(r).vector;
        let i = ops.build(r);
        if three_path.is_none() && (e != p || e != i) {
            three_path = Some(json!({"request": r.to_string(), "explicit": e,
                                     "projection": p, "isb": i}));
        }
        for (name, v) in [("explicit", &e), ("isb", &i)] {
            let k = km.apply(v);
            if annihilated.is_none() && !k.is_zero() {
                annihilated = Some(json!({"request": r.to_string(), "method": name, "k-": k}));
            }
        }
        let pe = proj.apply(&e);
        if idempotent.is_none() && pe != e {
            idempotent = Some(json!({"request": r.to_string(), "detail": mismatch(&e, &pe, &e)}));
        }
        if homogeneous.is_none() && e.occupation() != Some((n as u32, m as u32)) {
            homogeneous = Some(json!({"request": r.to_string(), "state": e}));
        }
        explicit.insert(r, e);
    }

    // C1 / C2: a permuted request yields the same vector as the sorted one.
    let symmetric = reqs.iter().find_map(|r| {
        let mut up = r.upper().to_vec();
        let mut lo = r.lower().to_vec();
        up.sort();
        lo.sort();
        let sorted = IrrepRequest::from_indices(up, lo).unwrap();
        (explicit[r] != explicit[&sorted])
            .then(|| json!({"request": r.to_string(), "sorted": sorted.to_string()}))
    });

    // C3: every (l, k) trace vanishes.
    let mut traceless = None;
    if n > 0 && m > 0 {
        'outer: for r in &reqs {
            for l in 0..n {
                for k in 0..m {
                    let mut sum = StateVector::zero();
                    for g in 1..=3u8 {
                        sum.add_assign(&explicit[&r.with_upper(l, g).with_lower(k, g)]);
                    }
                    if !sum.is_zero() {
                        traceless = Some(json!({"request": r.to_string(), "l": l + 1,
                                                "k": k + 1, "trace": sum}));
                        break 'outer;
                    }
                }
            }
        }
    }

    let p = json!({"n": n, "m": m, "states": reqs.len()});
    vec![
        CheckRecord::from_outcome(format!("three-path/{n}-{m}"), p.clone(), three_path),
        CheckRecord::from_outcome(format!("homogeneous/{n}-{m}"), p.clone(), homogeneous),
        CheckRecord::from_outcome(format!("symmetric/{n}-{m}"), p.clone(), symmetric),
        CheckRecord::from_outcome(format!("traceless/{n}-{m}"), p.clone(), traceless),
        CheckRecord::from_outcome(format!("k-annihilation/{n}-{m}"), p.clone(), annihilated),
        CheckRecord::from_outcome(format!("idempotent/{n}-{m}"), p, idempotent),
    ]
}

/// Recurrence, closed form vs contraction coefficient, and the `n → n+1`
/// shift identity.
pub fn coefficient_checks() -> Vec<CheckRecord> {
    let mut rec_fail = None;
    let mut big_l_fail = None;
    let mut shift_fail = None;
    for t in 0..=8usize {
        for n in 0..=t {
            let m = t - n;
            for r in 1..=n.min(m) {
                // k₋ P O|0⟩ = 0 forces r (n+m+2−r) l_r = −l_{r−1}
                let lhs = Rational::from_int((r * (n + m + 2 - r)) as i64) * coefficient_l(r, n, m);
                let prev = if r == 1 {
                    Rational::one()
                } else {
                    coefficient_l(r - 1, n, m)
                };
                let rec_ok = lhs == -prev;
                if rec_fail.is_none() && !rec_ok {
                    rec_fail = Some(json!({"r": r, "n": n, "m": m}));
                }
                let fact: Rational = (1..=r as i64).map(Rational::from_int).product();
                if big_l_fail.is_none()
                    && coefficient_l(r, n, m) * fact != coefficient_big_l(r, n, m).unwrap()
                {
                    big_l_fail = Some(json!({"r": r, "n": n, "m": m}));
                }
            }
        }
    }
    for n in 0..=5usize {
        for m in 0..=5usize {
            for r in 0..=n.min(m) {
                let lhs = coefficient_l(r, n + 1, m);
                let rhs = Rational::new((n + m + 2 - r) as i64, (n + m + 2) as i64).unwrap()
                    * coefficient_l(r, n, m);
                if shift_fail.is_none() && lhs != rhs {
                    shift_fail = Some(json!({"r": r, "n": n, "m": m, "lhs": lhs, "rhs": rhs}));
                }
            }
        }
    }
    vec![
        CheckRecord::from_outcome("coefficients/recurrence", json!({"max_total": 8}), rec_fail),
        CheckRecord::from_outcome("coefficients/l-vs-L", json!({"max_total": 8}), big_l_fail),
        CheckRecord::from_outcome("coefficients/shift", json!({"max_nm": 5}), shift_fail),
    ]
}

/// Gram rank equals the irrep dimension, and every `Q^a` maps the span
/// into itself.
fn span_checks(n: usize, m: usize, ops: &IsbOperators<Rational>) -> Vec<CheckRecord> {
    let states: Vec<_> = IrrepRequest::all(n, m)
        .iter()
        .map(|r| ops.build(r))
        .collect();
    let rank = rational_rank(&gram_matrix(&states));
    let dim = dimension(n, m);
    let mut out = vec![CheckRecord::from_outcome(
        format!("gram-rank/{n}-{m}"),
        json!({"n": n, "m": m, "expected": dim}),
        (rank != dim).then(|| json!({"rank": rank})),
    )];
    if n + m <= 3 {
        let basis = span_basis::<ExtScalar>(n, m);
        let ext: Vec<StateVector<ExtScalar>> = states.iter().map(|s| s.to_ext()).collect();
        let gens = GellMannTable::standard().generators();
        let failure = gens.iter().enumerate().find_map(|(a, q)| {
            ext.iter().find_map(|s| {
                let img = q.apply(s);
                (!basis.contains(&img)).then(|| json!({"a": a + 1, "input": s, "image": img}))
            })
        });
        out.push(CheckRecord::from_outcome(
            format!("generator-closure/{n}-{m}"),
            json!({"n": n, "m": m}),
            failure,
        ));
    }
    out
}

/// Tower states keep the SU(3) action of their seed and carry the
/// labels `k = (n+m+3)/2`, `m′ = k + ρ`.
fn tower_checks(max_total: usize) -> Vec<CheckRecord> {
    let gens = GellMannTable::standard().generators();
    let kp = crate::operator::k_plus::<ExtScalar>();
    let mut out = Vec::new();
    for (n, m) in sectors(max_total) {
        let mut failure = None;
        for r in IrrepRequest::all(n, m) {
            let seed = irrep_explicit(&r).vector;
            for rho in 0..=2u32 {
                let tower = crate::su3::tower_state(&r, rho);
                let w = sp2r_weight(&tower).expect("homogeneous");
                let k = Rational::new((n + m + 3) as i64, 2).unwrap();
                if failure.is_none()
                    && (w.k != k || w.m_prime != k.clone() + Rational::from_int(rho as i64))
                {
                    failure = Some(json!({"request": r.to_string(), "rho": rho, "weight": w}));
                }
                let tower_ext = tower.to_ext();
                for (a, q) in gens.iter().enumerate() {
                    let lhs = q.apply(&tower_ext);
                    let rhs = kp.pow(rho).apply(&q.apply(&seed.to_ext()));
                    if failure.is_none() && lhs != rhs {
                        failure = Some(json!({"request": r.to_string(), "rho": rho, "a": a + 1}));
                    }
                }
            }
        }
        out.push(CheckRecord::from_outcome(
            format!("tower/{n}-{m}"),
            json!({"n": n, "m": m, "rho_max": 2}),
            failure,
        ));
    }
    out
}

/// Commuting creation operators on monomials, the annihilator brackets on
/// irrep states, and multiplicity-freeness.
fn isb_checks(config: &VerifyConfig) -> Vec<CheckRecord> {
    let ops = config.isb();
    let monos = monomial_states::<Rational>(config.t());
    let mut out = Vec::new();
    for al in 1..=3 {
        for be in 1..=3 {
            let pairs = [
                ("A+A+", ops.a_dagger(al), ops.a_dagger(be), al < be),
                ("B+B+", ops.b_dagger(al), ops.b_dagger(be), al < be),
                ("A+B+", ops.a_dagger(al), ops.b_dagger(be), true),
            ];
            for (name, x, y, wanted) in pairs {
                if !wanted {
                    continue;
                }
                let c = commutator(x, y);
                out.push(CheckRecord::from_outcome(
                    format!("commute/{name}/{al}{be}"),
                    json!({"alpha": al, "beta": be, "max_total": config.max_total}),
                    first_mismatch(&monos, |s| c.apply(s), |_| StateVector::zero()),
                ));
            }
        }
    }

    let inv2 = LinearOperator::<Rational>::number(NumberFunction::inverse_total(2));
    let irreps: Vec<(IrrepRequest, StateVector<Rational>)> = sectors(config.max_total)
        .into_iter()
        .flat_map(|(n, m)| IrrepRequest::all(n, m))
        .map(|r| {
            let v = ops.build(&r);
            (r, v)
        })
        .collect();
    let commr_states: Vec<StateVector<Rational>> = irreps
        .iter()
        .filter(|(r, _)| r.n() + r.m() <= config.max_total.min(3))
        .map(|(_, v)| v.clone())
        .collect();
    for al in 1..=3 {
        for be in 1..=3 {
            let d = if al == be {
                Rational::one()
            } else {
                Rational::zero()
            };
            let id = LinearOperator::scalar(d);
            let relations = [
                (
                    "A-A+",
                    commutator(ops.a(al), ops.a_dagger(be)),
                    id.clone() - inv2.clone() * ops.b_dagger(al).clone() * ops.b(be).clone(),
                ),
                (
                    "A-B+",
                    commutator(ops.a(al), ops.b_dagger(be)),
                    -(inv2.clone() * ops.b_dagger(al).clone() * ops.a(be).clone()),
                ),
                (
                    "B-B+",
                    commutator(ops.b(al), ops.b_dagger(be)),
                    id.clone() - inv2.clone() * ops.a_dagger(al).clone() * ops.a(be).clone(),
                ),
            ];
            for (name, lhs, rhs) in relations {
                out.push(CheckRecord::from_outcome(
                    format!("annihilator-bracket/{name}/{al}{be}"),
                    json!({"alpha": al, "beta": be, "states": commr_states.len()}),
                    first_mismatch(&commr_states, |s| lhs.apply(s), |s| rhs.apply(s)),
                ));
            }
        }
    }

    let states: Vec<StateVector<Rational>> = irreps.iter().map(|(_, v)| v.clone()).collect();
    let ab = ops.a_dot_b();
    let abd = ops.a_dag_dot_b_dag();
    out.push(CheckRecord::from_outcome(
        "multiplicity-free/A.B",
        json!({"states": states.len()}),
        first_mismatch(&states, |s| ab.apply(s), |_| StateVector::zero()),
    ));
    out.push(CheckRecord::from_outcome(
        "multiplicity-free/A+.B+",
        json!({"states": states.len()}),
        first_mismatch(&states, |s| abd.apply(s), |_| StateVector::zero()),
    ));
    out
}

fn ladder_checks(config: &VerifyConfig) -> Vec<CheckRecord> {
    let ops = config.isb();
    if config.max_total == 0 {
        return Vec::new();
    }
    sectors(config.max_total - 1)
        .par_iter()
        .map(|&(n, m)| crate::su3::ladder_check_with(n, m, &ops))
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::EACH {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig::new(2);
        for s in Suite::EACH {
            let rep = run_suite(s, &cfg).unwrap();
            assert!(rep.passed(), "{s}: {:?}", rep.failures().next());
            assert!(rep.summary.total > 0, "{s}");
        }
    }

    #[test]
    fn faults_are_caught() {
        let cfg = VerifyConfig::new(2).with_fault(Fault::IsbSign);
        assert!(!run_suite(Suite::Irreps, &cfg).unwrap().passed());
        assert!(!run_suite(Suite::Ladder, &cfg).unwrap().passed());
        let cfg = VerifyConfig::new(1).with_fault(Fault::GellMannEntry);
        assert!(!run_suite(Suite::Algebra, &cfg).unwrap().passed());
    }

    #[test]
    fn recurrence_needs_the_r_factor() {
        // (n+m+2−r)/(r−1) l_r = −l_{r−1} disagrees with the closed form
        let (n, m) = (2, 2);
        let lhs = Rational::from_int(4) * coefficient_l(2, n, m);
        assert_ne!(lhs, -coefficient_l(1, n, m));
        assert_eq!(lhs * Rational::from_int(2), -coefficient_l(1, n, m));
    }

    #[test]
    fn bound_is_enforced() {
        let cfg = VerifyConfig::new(MAX_TOTAL_LIMIT + 1);
        assert!(matches!(
            run_suite(Suite::Sp2r, &cfg),
            Err(Error::ResourceBound { .. })
        ));
    }
}
