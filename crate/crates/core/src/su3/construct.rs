use num_traits::{One, Zero};

use super::{IrrepRequest, IrrepState, Method};
use crate::error::{Error, Result};
use crate::fock::{FockMonomial, StateVector};
use crate::operator::{k_minus, k_plus, LinearOperator};
use crate::scalar::Rational;

/// The bare tensor component `a†^{α₁}…a†^{αₙ} b†_{β₁}…b†_{βₘ}|0⟩`.
pub fn tensor_monomial(req: &IrrepRequest) -> StateVector<Rational> {
    StateVector::monomial(monomial_of(req.upper(), req.lower()))
}

fn monomial_of(upper: &[u8], lower: &[u8]) -> FockMonomial {
    let mut m = FockMonomial::VACUUM;
    for &u in upper {
        m.a[u as usize - 1] += 1;
    }
    for &l in lower {
        m.b[l as usize - 1] += 1;
    }
    m
}

/// Scalar part of the contraction coefficient for `r` contractions:
/// `(−1)^r / [(n+m+1)(n+m)…(n+m+2−r)]`.
pub fn coefficient_big_l(r: usize, n: usize, m: usize) -> Result<Rational> {
    if r < 1 || r > n.min(m) {
        return Err(Error::Domain(format!(
            "contraction order r = {r} outside 1..={} for ({n}, {m})",
            n.min(m)
        )));
    }
    Ok(falling_coefficient(r, n + m))
}

/// `(−1)^r / ∏_{i=0}^{r-1} (t+1−i)`; equals 1 at `r = 0`.
fn falling_coefficient(r: usize, t: usize) -> Rational {
    let mut den = Rational::one();
    for i in 0..r {
        den = den * Rational::from_int((t + 1 - i) as i64);
    }
    let sign = if r.is_multiple_of(2) { 1 } else { -1 };
    Rational::from_int(sign) * den.recip().expect("positive product")
}

/// Projector weights `l_r(n,m) = (−1)^r/r! · (n+m+1−r)!/(n+m+1)!`.
///
/// Zero once `r > n+m+1`, where the falling factorial would pass through
/// zero; those terms never contribute since `r ≤ min(n,m)` in practice.
pub fn coefficient_l(r: usize, n: usize, m: usize) -> Rational {
    if r > n + m + 1 {
        return Rational::zero();
    }
    let mut r_fact = Rational::one();
    for k in 2..=r {
        r_fact = r_fact * Rational::from_int(k as i64);
    }
    falling_coefficient(r, n + m) * r_fact.recip().unwrap()
}

/// `r` disjoint contractions `(l_i, k_i)` of upper slot `l_i` with lower
/// slot `k_i` (0-based), listed with `l` ascending. Each unordered set of
/// pairs appears once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairingPattern {
    pub pairs: Vec<(usize, usize)>,
}

impl PairingPattern {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// All pairing patterns of size `r` between `n` upper and `m` lower slots.
/// There are `C(n,r)·m!/(m−r)!` of them.
pub fn pairing_patterns(n: usize, m: usize, r: usize) -> Vec<PairingPattern> {
    let mut out = Vec::new();
    if r > n.min(m) {
        return out;
    }
    for ls in combinations(n, r) {
        for ks in arrangements(m, r) {
            out.push(PairingPattern {
                pairs: ls.iter().copied().zip(ks).collect(),
            });
        }
    }
    out
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Ordered selections of `r` distinct elements of `0..m`.
fn arrangements(m: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, r: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in 0..m {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(m, r, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(m, r, &mut vec![false; m], &mut Vec::new(), &mut out);
    out
}

/// The traceless tensor expansion:
/// `Σ_r L_r k₊^r Σ_{patterns} δ…δ O_reduced |0⟩`.
pub fn irrep_explicit(req: &IrrepRequest) -> IrrepState {
    let (n, m) = (req.n(), req.m());
    let mut vector = tensor_monomial(req);
    let kp = k_plus::<Rational>();
    for r in 1..=req.q() {
        let mut reduced = StateVector::zero();
        for p in pairing_patterns(n, m, r) {
            if p.pairs
                .iter()
                .any(|&(l, k)| req.upper()[l] != req.lower()[k])
            {
                continue;
            }
            let upper: Vec<u8> = (0..n)
                .filter(|i| !p.pairs.iter().any(|&(l, _)| l == *i))
                .map(|i| req.upper()[i])
                .collect();
            let lower: Vec<u8> = (0..m)
                .filter(|i| !p.pairs.iter().any(|&(_, k)| k == *i))
                .map(|i| req.lower()[i])
                .collect();
            reduced.add_term(monomial_of(&upper, &lower), Rational::one());
        }
        if reduced.is_zero() {
            continue;
        }
        let coeff = coefficient_big_l(r, n, m).expect("r within 1..=q");
        vector.add_assign(&kp.pow(r as u32).apply(&reduced).scale(&coeff));
    }
    IrrepState {
        request: req.clone(),
        vector,
        method: Method::Explicit,
    }
}

/// `P(n,m) = Σ_{r=0}^{min(n,m)} l_r(n,m) k₊^r k₋^r`.
pub fn projector(n: usize, m: usize) -> LinearOperator<Rational> {
    let kp = k_plus::<Rational>();
    let km = k_minus::<Rational>();
    LinearOperator::sum(
        (0..=n.min(m))
            .map(|r| (kp.pow(r as u32) * km.pow(r as u32)).scaled(coefficient_l(r, n, m))),
    )
}

/// The projector applied to the bare tensor monomial.
pub fn projection_apply(req: &IrrepRequest) -> IrrepState {
    let seed = tensor_monomial(req);
    let kp = k_plus::<Rational>();
    let km = k_minus::<Rational>();
    let mut vector = seed.clone();
    let mut lowered = seed;
    for r in 1..=req.q() {
        lowered = km.apply(&lowered);
        if lowered.is_zero() {
            break;
        }
        let term = kp.pow(r as u32).apply(&lowered);
        vector.add_assign(&term.scale(&coefficient_l(r, req.n(), req.m())));
    }
    IrrepState {
        request: req.clone(),
        vector,
        method: Method::Projection,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    fn req(u: &[u8], l: &[u8]) -> IrrepRequest {
        IrrepRequest::from_indices(u.to_vec(), l.to_vec()).unwrap()
    }

    fn mono(a: [u32; 3], b: [u32; 3]) -> FockMonomial {
        FockMonomial::new(a, b)
    }

    #[test]
    fn tensor_monomial_examples() {
        assert_eq!(
            tensor_monomial(&req(&[2], &[])),
            StateVector::monomial(mono([0, 1, 0], [0; 3]))
        );
        assert_eq!(
            tensor_monomial(&req(&[1], &[1])),
            StateVector::monomial(mono([1, 0, 0], [1, 0, 0]))
        );
        assert_eq!(
            tensor_monomial(&req(&[1, 1], &[])),
            StateVector::monomial(mono([2, 0, 0], [0; 3]))
        );
    }

    #[test]
    fn big_l_values() {
        assert_eq!(coefficient_big_l(1, 1, 1).unwrap(), q(-1, 3));
        assert_eq!(coefficient_big_l(1, 2, 1).unwrap(), q(-1, 4));
        assert_eq!(coefficient_big_l(2, 2, 2).unwrap(), q(1, 20));
        assert!(coefficient_big_l(0, 2, 2).is_err());
        assert!(coefficient_big_l(2, 2, 1).is_err());
    }

    #[test]
    fn small_l_values() {
        assert_eq!(coefficient_l(0, 3, 4), q(1, 1));
        assert_eq!(coefficient_l(1, 1, 1), q(-1, 3));
        assert_eq!(coefficient_l(2, 2, 2), q(1, 40));
    }

    #[test]
    fn pattern_counts() {
        // C(n,r)·m!/(m−r)!
        assert_eq!(pairing_patterns(2, 2, 1).len(), 4);
        assert_eq!(pairing_patterns(2, 2, 2).len(), 2);
        assert_eq!(pairing_patterns(3, 2, 2).len(), 6);
        assert_eq!(pairing_patterns(1, 0, 1).len(), 0);
        assert_eq!(
            pairing_patterns(2, 3, 0),
            vec![PairingPattern { pairs: vec![] }]
        );
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(
            irrep_explicit(&req(&[1], &[])).vector,
            StateVector::monomial(mono([1, 0, 0], [0; 3]))
        );
        let octet = irrep_explicit(&req(&[1], &[1])).vector;
        let expected = StateVector::from_terms([
            (mono([1, 0, 0], [1, 0, 0]), q(2, 3)),
            (mono([0, 1, 0], [0, 1, 0]), q(-1, 3)),
            (mono([0, 0, 1], [0, 0, 1]), q(-1, 3)),
        ]);
        assert_eq!(octet, expected);
        assert_eq!(
            irrep_explicit(&req(&[1], &[2])).vector,
            StateVector::monomial(mono([1, 0, 0], [0, 1, 0]))
        );
        assert_eq!(irrep_explicit(&req(&[], &[])).vector, StateVector::vacuum());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(
            projection_apply(&req(&[2], &[])).vector,
            StateVector::monomial(mono([0, 1, 0], [0; 3]))
        );
        for r in [req(&[1], &[1]), req(&[1, 2], &[3]), req(&[1, 1], &[1, 1])] {
            assert_eq!(
                projection_apply(&r).vector,
                irrep_explicit(&r).vector,
                "{r}"
            );
            assert_eq!(
                projector(r.n(), r.m()).apply(&tensor_monomial(&r)),
                projection_apply(&r).vector
            );
        }
    }
}
