//! SU(2) Schwinger bosons on the triplet modes `a¹`, `a²`.
//!
//! The b-modes and `a³` stay empty, so the SU(2) states live in the same
//! Fock space as the SU(3) construction.

use serde::Serialize;

use crate::error::{check_index, Result};
use crate::fock::{FockMonomial, Mode, StateVector};
use crate::operator::{LinearOperator, NumberFunction};
use crate::scalar::Rational;

/// `a†^{α₁} … a†^{αₙ}|0⟩`, spin `j = n/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Su2State {
    pub indices: Vec<u8>,
    pub vector: StateVector<Rational>,
}

impl Su2State {
    /// `j = n/2`
    pub fn j(&self) -> Rational {
        Rational::new(self.indices.len() as i64, 2).unwrap()
    }

    /// `m = (n₁ − n₂)/2`
    pub fn m(&self) -> Rational {
        let up = self.indices.iter().filter(|&&i| i == 1).count() as i64;
        let down = self.indices.len() as i64 - up;
        Rational::new(up - down, 2).unwrap()
    }
}

pub fn su2_irrep_state(indices: &[u8]) -> Result<Su2State> {
    let mut m = FockMonomial::VACUUM;
    for &i in indices {
        check_index("SU(2) index", i as i64, 1, 2)?;
        m.a[i as usize - 1] += 1;
    }
    Ok(Su2State {
        indices: indices.to_vec(),
        vector: StateVector::monomial(m),
    })
}

#[derive(Debug, Clone)]
pub struct Su2Generators {
    pub j_plus: LinearOperator<Rational>,
    pub j_minus: LinearOperator<Rational>,
    pub j_3: LinearOperator<Rational>,
    /// `(N/2)(N/2 + 1)` as a number function.
    pub casimir: LinearOperator<Rational>,
}

impl Su2Generators {
    /// `J² = J₃² + ½(J₊J₋ + J₋J₊)` assembled from the bilinears.
    pub fn casimir_bilinear(&self) -> LinearOperator<Rational> {
        let half = Rational::new(1, 2).unwrap();
        self.j_3.clone() * self.j_3.clone()
            + (self.j_plus.clone() * self.j_minus.clone()
                + self.j_minus.clone() * self.j_plus.clone())
            .scaled(half)
    }
}

pub fn su2_generators() -> Su2Generators {
    let ad = |i| LinearOperator::create(Mode::a(i));
    let a = |i| LinearOperator::annihilate(Mode::a(i));
    let half = Rational::new(1, 2).unwrap();
    Su2Generators {
        j_plus: ad(1) * a(2),
        j_minus: ad(2) * a(1),
        j_3: (ad(1) * a(1) - ad(2) * a(2)).scaled(half),
        casimir: LinearOperator::number(NumberFunction::new("(N/2)(N/2+1)", |n, _| {
            Rational::new(n as i64 * (n as i64 + 2), 4).unwrap()
        })),
    }
}

/// Monomials in `a¹`, `a²` with `n₁ + n₂ = n`.
pub fn su2_sector(n: u32) -> Vec<FockMonomial> {
    (0..=n)
        .map(|k| FockMonomial::new([n - k, k, 0], [0; 3]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::commutator;

    type Sv = StateVector<Rational>;

    #[test]
    fn irrep_state_examples() {
        assert_eq!(su2_irrep_state(&[]).unwrap().vector, Sv::vacuum());
        let s = su2_irrep_state(&[1]).unwrap();
        assert_eq!(s.vector, Sv::monomial(FockMonomial::new([1, 0, 0], [0; 3])));
        assert_eq!(s.j(), Rational::new(1, 2).unwrap());
        let s = su2_irrep_state(&[1, 2]).unwrap();
        assert_eq!(s.vector, Sv::monomial(FockMonomial::new([1, 1, 0], [0; 3])));
        assert_eq!(s.m(), Rational::from_int(0));
        assert!(su2_irrep_state(&[3]).is_err());
    }

    #[test]
    fn generator_examples() {
        let g = su2_generators();
        let a1 = Sv::monomial(FockMonomial::new([1, 0, 0], [0; 3]));
        let a2 = Sv::monomial(FockMonomial::new([0, 1, 0], [0; 3]));
        assert_eq!(g.j_3.apply(&a1), a1.scale(&Rational::new(1, 2).unwrap()));
        assert_eq!(g.j_plus.apply(&a2), a1);
        let a11 = su2_irrep_state(&[1, 1]).unwrap().vector;
        assert_eq!(g.casimir.apply(&a11), a11.scale(&Rational::from_int(2)));
    }

    #[test]
    fn algebra_and_casimir_forms_agree() {
        let g = su2_generators();
        let bil = g.casimir_bilinear();
        let c3p = commutator(&g.j_3, &g.j_plus);
        let cpm = commutator(&g.j_plus, &g.j_minus);
        for n in 0..=8 {
            for m in su2_sector(n) {
                let s = Sv::monomial(m);
                assert_eq!(c3p.apply(&s), g.j_plus.apply(&s));
                assert_eq!(cpm.apply(&s), g.j_3.apply(&s).scale(&Rational::from_int(2)));
                assert_eq!(bil.apply(&s), g.casimir.apply(&s));
            }
        }
    }

    #[test]
    fn permuting_indices_gives_same_state() {
        let x = su2_irrep_state(&[1, 2, 2]).unwrap();
        let y = su2_irrep_state(&[2, 1, 2]).unwrap();
        assert_eq!(x.vector, y.vector);
    }
}
