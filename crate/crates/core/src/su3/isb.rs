use super::{IrrepRequest, IrrepState, Method};
use crate::fock::{Mode, StateVector};
use crate::operator::{k_minus, k_plus, LinearOperator, NumberFunction};
use crate::scalar::{Rational, Scalar};

/// The irreducible Schwinger boson operators
///
/// ```text
/// A†^α = a†^α − 1/(N_a+N_b+1) · k₊ b^α      A_α = a_α − b†_α k₋ · 1/(N_a+N_b+1)
/// B†_α = b†_α − 1/(N_a+N_b+1) · k₊ a_α      B^α = b^α − a†^α k₋ · 1/(N_a+N_b+1)
/// ```
///
/// Products act right to left, so in `A†` the number function sees the
/// state after `k₊ b^α`, and in `A` it sees the input state.
#[derive(Clone)]
pub struct IsbOperators<S> {
    a_dag: Vec<LinearOperator<S>>,
    b_dag: Vec<LinearOperator<S>>,
    a: Vec<LinearOperator<S>>,
    b: Vec<LinearOperator<S>>,
}

impl<S: Scalar> Default for IsbOperators<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> IsbOperators<S> {
    pub fn new() -> Self {
        Self::with_dressing(-S::one())
    }

    /// Same operators with the dressing term multiplied by `coeff`
    /// instead of −1. Only useful for fault injection.
    #[doc(hidden)]
    pub fn with_dressing(coeff: S) -> Self {
        let inv = || LinearOperator::number(NumberFunction::inverse_total(1));
        let kp = k_plus::<S>();
        let km = k_minus::<S>();
        let cr = |m| LinearOperator::<S>::create(m);
        let an = |m| LinearOperator::<S>::annihilate(m);
        let c = coeff;
        IsbOperators {
            a_dag: (1..=3)
                .map(|al| {
                    cr(Mode::a(al))
                        + LinearOperator::product([inv(), kp.clone(), an(Mode::b(al))])
                            .scaled(c.clone())
                })
                .collect(),
            b_dag: (1..=3)
                .map(|al| {
                    cr(Mode::b(al))
                        + LinearOperator::product([inv(), kp.clone(), an(Mode::a(al))])
                            .scaled(c.clone())
                })
                .collect(),
            a: (1..=3)
                .map(|al| {
                    an(Mode::a(al))
                        + LinearOperator::product([cr(Mode::b(al)), km.clone(), inv()])
                            .scaled(c.clone())
                })
                .collect(),
            b: (1..=3)
                .map(|al| {
                    an(Mode::b(al))
                        + LinearOperator::product([cr(Mode::a(al)), km.clone(), inv()])
                            .scaled(c.clone())
                })
                .collect(),
        }
    }

    /// `A†^α`, `alpha` in 1..=3. Panics otherwise.
    pub fn a_dagger(&self, alpha: usize) -> &LinearOperator<S> {
        &self.a_dag[alpha - 1]
    }

    /// `B†_β`
    pub fn b_dagger(&self, beta: usize) -> &LinearOperator<S> {
        &self.b_dag[beta - 1]
    }

    /// `A_α`
    pub fn a(&self, alpha: usize) -> &LinearOperator<S> {
        &self.a[alpha - 1]
    }

    /// `B^β`
    pub fn b(&self, beta: usize) -> &LinearOperator<S> {
        &self.b[beta - 1]
    }

    /// `A·B = Σ_γ A_γ B^γ`
    pub fn a_dot_b(&self) -> LinearOperator<S> {
        LinearOperator::sum((1..=3).map(|g| self.a(g).clone() * self.b(g).clone()))
    }

    /// `A†·B† = Σ_γ A†^γ B†_γ`
    pub fn a_dag_dot_b_dag(&self) -> LinearOperator<S> {
        LinearOperator::sum((1..=3).map(|g| self.a_dagger(g).clone() * self.b_dagger(g).clone()))
    }

    /// `A†^{α₁}…A†^{αₙ} B†_{β₁}…B†_{βₘ}|0⟩`: the B†'s act first.
    pub fn build(&self, req: &IrrepRequest) -> StateVector<S> {
        let mut s = StateVector::vacuum();
        for &b in req.lower().iter().rev() {
            s = self.b_dagger(b as usize).apply(&s);
        }
        for &a in req.upper().iter().rev() {
            s = self.a_dagger(a as usize).apply(&s);
        }
        s
    }
}

pub fn irrep_isb(req: &IrrepRequest) -> IrrepState {
    IrrepState {
        request: req.clone(),
        vector: IsbOperators::<Rational>::new().build(req),
        method: Method::Isb,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::FockMonomial;
    use crate::su3::irrep_explicit;

    type Sv = StateVector<Rational>;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    fn mono(a: [u32; 3], b: [u32; 3]) -> FockMonomial {
        FockMonomial::new(a, b)
    }

    fn req(u: &[u8], l: &[u8]) -> IrrepRequest {
        IrrepRequest::from_indices(u.to_vec(), l.to_vec()).unwrap()
    }

    fn octet_11() -> Sv {
        Sv::from_terms([
            (mono([1, 0, 0], [1, 0, 0]), q(2, 3)),
            (mono([0, 1, 0], [0, 1, 0]), q(-1, 3)),
            (mono([0, 0, 1], [0, 0, 1]), q(-1, 3)),
        ])
    }

    #[test]
    fn creation_on_vacuum_is_bare() {
        let ops = IsbOperators::<Rational>::new();
        assert_eq!(
            ops.a_dagger(1).apply(&Sv::vacuum()),
            Sv::monomial(mono([1, 0, 0], [0; 3]))
        );
        assert_eq!(
            ops.b_dagger(2).apply(&Sv::vacuum()),
            Sv::monomial(mono([0; 3], [0, 1, 0]))
        );
    }

    #[test]
    fn a_dagger_on_b1_gives_octet() {
        let ops = IsbOperators::<Rational>::new();
        let b1 = Sv::monomial(mono([0; 3], [1, 0, 0]));
        assert_eq!(ops.a_dagger(1).apply(&b1), octet_11());
    }

    #[test]
    fn annihilators() {
        let ops = IsbOperators::<Rational>::new();
        assert!(ops.a(1).apply(&Sv::vacuum()).is_zero());
        // B² on a†¹b†₂|0⟩: k₋ finds no matching pair, only b^2 acts
        let s = Sv::monomial(mono([1, 0, 0], [0, 1, 0]));
        assert_eq!(ops.b(2).apply(&s), Sv::monomial(mono([1, 0, 0], [0; 3])));
        // B² on a†²b†₂|0⟩ = a†² − a†² k₋ (1/3) a†²b†₂ = (2/3) a†²
        let s = Sv::monomial(mono([0, 1, 0], [0, 1, 0]));
        assert_eq!(
            ops.b(2).apply(&s),
            Sv::from_term(mono([0, 1, 0], [0; 3]), q(2, 3))
        );
    }

    #[test]
    fn construction_examples() {
        assert_eq!(
            irrep_isb(&req(&[3], &[])).vector,
            Sv::monomial(mono([0, 0, 1], [0; 3]))
        );
        assert_eq!(irrep_isb(&req(&[1], &[1])).vector, octet_11());
        let r = req(&[1, 1], &[2]);
        assert_eq!(irrep_isb(&r).vector, irrep_explicit(&r).vector);
        let ab = IsbOperators::<Rational>::new().a_dot_b();
        assert!(ab.apply(&irrep_isb(&r).vector).is_zero());
    }
}
