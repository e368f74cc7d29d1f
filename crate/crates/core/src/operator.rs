//! Composable linear operators on the Fock space.
//!
//! Operators are evaluable expression trees over ladder operators and
//! number-function multipliers. Identities are checked by applying both
//! sides to a finite set of states and comparing exactly. In a product the
//! rightmost factor acts first, and a number function is evaluated on the
//! state it receives at its position in the product.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::fock::{Mode, StateVector};
use crate::scalar::{Rational, Scalar};

/// A diagonal multiplier `f(N_a, N_b)`.
#[derive(Clone)]
pub struct NumberFunction {
    name: Arc<str>,
    f: Arc<dyn Fn(u32, u32) -> Rational + Send + Sync>,
}

impl NumberFunction {
    pub fn new(
        name: impl Into<Arc<str>>,
        f: impl Fn(u32, u32) -> Rational + Send + Sync + 'static,
    ) -> Self {
        NumberFunction {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn eval(&self, n_a: u32, n_b: u32) -> Rational {
        (self.f)(n_a, n_b)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `N_a`
    pub fn n_a() -> Self {
        NumberFunction::new("N_a", |a, _| Rational::from_int(a))
    }

    /// `N_b`
    pub fn n_b() -> Self {
        NumberFunction::new("N_b", |_, b| Rational::from_int(b))
    }

    /// `1 / (N_a + N_b + shift)`
    pub fn inverse_total(shift: u32) -> Self {
        NumberFunction::new(format!("1/(N_a+N_b+{shift})"), move |a, b| {
            Rational::new(1, a + b + shift).expect("positive denominator")
        })
    }

    /// `k₀ = (N_a + N_b + 3) / 2`
    pub fn k_zero() -> Self {
        NumberFunction::new("(N_a+N_b+3)/2", |a, b| {
            Rational::new(a + b + 3, 2).expect("nonzero")
        })
    }
}

impl fmt::Debug for NumberFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Create,
    Annihilate,
}

enum Node<S> {
    Zero,
    Identity,
    Ladder(Ladder, Mode),
    Number(NumberFunction),
    Scaled(S, LinearOperator<S>),
    Sum(Vec<LinearOperator<S>>),
    /// Factors in written order; applied right to left.
    Product(Vec<LinearOperator<S>>),
}

/// A linear map on [`StateVector`]s over the scalar ring `S`.
#[derive(Clone)]
pub struct LinearOperator<S>(Arc<Node<S>>);

impl<S: Scalar> LinearOperator<S> {
    fn node(n: Node<S>) -> Self {
        LinearOperator(Arc::new(n))
    }

    pub fn zero() -> Self {
        Self::node(Node::Zero)
    }

    pub fn identity() -> Self {
        Self::node(Node::Identity)
    }

    pub fn create(mode: Mode) -> Self {
        Self::node(Node::Ladder(Ladder::Create, mode))
    }

    pub fn annihilate(mode: Mode) -> Self {
        Self::node(Node::Ladder(Ladder::Annihilate, mode))
    }

    pub fn number(f: NumberFunction) -> Self {
        Self::node(Node::Number(f))
    }

    pub fn scalar(c: S) -> Self {
        Self::identity().scaled(c)
    }

    pub fn scaled(&self, c: S) -> Self {
        Self::node(Node::Scaled(c, self.clone()))
    }

    pub fn sum(ops: impl IntoIterator<Item = LinearOperator<S>>) -> Self {
        let ops: Vec<_> = ops.into_iter().collect();
        if ops.is_empty() {
            Self::zero()
        } else {
            Self::node(Node::Sum(ops))
        }
    }

    /// `ops[0] · ops[1] · … · ops[k]`, so `ops[k]` acts first.
    pub fn product(ops: impl IntoIterator<Item = LinearOperator<S>>) -> Self {
        let ops: Vec<_> = ops.into_iter().collect();
        if ops.is_empty() {
            Self::identity()
        } else {
            Self::node(Node::Product(ops))
        }
    }

    /// `self^k`
    pub fn pow(&self, k: u32) -> Self {
        Self::product(std::iter::repeat_n(self.clone(), k as usize))
    }

    pub fn apply(&self, s: &StateVector<S>) -> StateVector<S> {
        if s.is_zero() {
            return StateVector::zero();
        }
        match &*self.0 {
            Node::Zero => StateVector::zero(),
            Node::Identity => s.clone(),
            Node::Ladder(Ladder::Create, m) => s.apply_creation(*m),
            Node::Ladder(Ladder::Annihilate, m) => s.apply_annihilation(*m),
            Node::Number(f) => StateVector::from_terms(
                s.iter()
                    .map(|(m, c)| (*m, c.clone() * S::from_rational(&f.eval(m.n_a(), m.n_b())))),
            ),
            Node::Scaled(c, op) => op.apply(s).scale(c),
            Node::Sum(ops) => {
                let mut out = StateVector::zero();
                for op in ops {
                    out.add_assign(&op.apply(s));
                }
                out
            }
            Node::Product(ops) => {
                let mut cur = s.clone();
                for op in ops.iter().rev() {
                    if cur.is_zero() {
                        break;
                    }
                    cur = op.apply(&cur);
                }
                cur
            }
        }
    }
}

impl<S: Scalar> fmt::Debug for LinearOperator<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Zero => write!(f, "0"),
            Node::Identity => write!(f, "1"),
            Node::Ladder(Ladder::Create, m) => write!(f, "{m}†"),
            Node::Ladder(Ladder::Annihilate, m) => write!(f, "{m}"),
            Node::Number(n) => write!(f, "{n:?}"),
            Node::Scaled(c, op) => write!(f, "({c})·{op:?}"),
            Node::Sum(ops) => {
                write!(f, "(")?;
                for (i, op) in ops.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{op:?}")?;
                }
                write!(f, ")")
            }
            Node::Product(ops) => {
                for (i, op) in ops.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{op:?}")?;
                }
                Ok(())
            }
        }
    }
}

impl<S: Scalar> Add for LinearOperator<S> {
    type Output = LinearOperator<S>;
    fn add(self, rhs: Self) -> Self {
        LinearOperator::sum([self, rhs])
    }
}

impl<S: Scalar> Sub for LinearOperator<S> {
    type Output = LinearOperator<S>;
    fn sub(self, rhs: Self) -> Self {
        LinearOperator::sum([self, -rhs])
    }
}

impl<S: Scalar> Neg for LinearOperator<S> {
    type Output = LinearOperator<S>;
    fn neg(self) -> Self {
        self.scaled(-S::one())
    }
}

/// Composition: `(p * q)(s) = p(q(s))`.
impl<S: Scalar> Mul for LinearOperator<S> {
    type Output = LinearOperator<S>;
    fn mul(self, rhs: Self) -> Self {
        LinearOperator::product([self, rhs])
    }
}

/// `[p, q] = p q − q p`
pub fn commutator<S: Scalar>(p: &LinearOperator<S>, q: &LinearOperator<S>) -> LinearOperator<S> {
    p.clone() * q.clone() - q.clone() * p.clone()
}

/// The SU(3)-invariant Sp(2,R) generators.
#[derive(Clone)]
pub struct Sp2r<S> {
    /// `k₊ = a†·b† = Σ_γ a†^γ b†_γ`
    pub k_plus: LinearOperator<S>,
    /// `k₋ = a·b = Σ_γ a_γ b^γ`
    pub k_minus: LinearOperator<S>,
    /// `k₀ = (N_a + N_b + 3)/2`
    pub k_zero: LinearOperator<S>,
}

pub fn sp2r_triple<S: Scalar>() -> Sp2r<S> {
    Sp2r {
        k_plus: k_plus(),
        k_minus: k_minus(),
        k_zero: LinearOperator::number(NumberFunction::k_zero()),
    }
}

pub fn k_plus<S: Scalar>() -> LinearOperator<S> {
    LinearOperator::sum(
        (1..=3).map(|g| LinearOperator::create(Mode::a(g)) * LinearOperator::create(Mode::b(g))),
    )
}

pub fn k_minus<S: Scalar>() -> LinearOperator<S> {
    LinearOperator::sum(
        (1..=3).map(|g| {
            LinearOperator::annihilate(Mode::a(g)) * LinearOperator::annihilate(Mode::b(g))
        }),
    )
}

/// `N_a` as a number-function multiplier.
pub fn number_a<S: Scalar>() -> LinearOperator<S> {
    LinearOperator::number(NumberFunction::n_a())
}

/// `N_b` as a number-function multiplier.
pub fn number_b<S: Scalar>() -> LinearOperator<S> {
    LinearOperator::number(NumberFunction::n_b())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::FockMonomial;

    type Sv = StateVector<Rational>;
    type Op = LinearOperator<Rational>;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    #[test]
    fn sp2r_on_vacuum() {
        let k = sp2r_triple::<Rational>();
        let vac = Sv::vacuum();
        let expected = Sv::from_terms((1..=3).map(|g| {
            let mut m = FockMonomial::VACUUM;
            m.a[g - 1] = 1;
            m.b[g - 1] = 1;
            (m, q(1, 1))
        }));
        assert_eq!(k.k_plus.apply(&vac), expected);
        assert!(k.k_minus.apply(&vac).is_zero());
        let ab = Sv::monomial(FockMonomial::new([1, 0, 0], [0, 1, 0]));
        assert_eq!(k.k_zero.apply(&ab), ab.scale(&q(5, 2)));
    }

    #[test]
    fn commutator_examples_on_vacuum() {
        let k = sp2r_triple::<Rational>();
        let vac = Sv::vacuum();
        assert_eq!(
            commutator(&k.k_minus, &k.k_plus).apply(&vac),
            vac.scale(&q(3, 1))
        );
        let a1 = Op::create(Mode::a(1));
        assert_eq!(
            commutator(&number_a(), &a1).apply(&vac),
            vac.apply_creation(Mode::a(1))
        );
        assert_eq!(
            commutator(&k.k_zero, &k.k_plus).apply(&vac),
            k.k_plus.apply(&vac)
        );
    }

    #[test]
    fn product_applies_rightmost_first() {
        // a₁ a†₁ |0⟩ = |0⟩ but a†₁ a₁ |0⟩ = 0
        let a = Op::annihilate(Mode::a(1));
        let ad = Op::create(Mode::a(1));
        let vac = Sv::vacuum();
        assert_eq!((a.clone() * ad.clone()).apply(&vac), vac);
        assert!((ad * a).apply(&vac).is_zero());
    }

    #[test]
    fn number_function_sees_intermediate_state() {
        // f(N) a†₁ |0⟩ evaluates f at N_a = 1
        let f = Op::number(NumberFunction::inverse_total(1));
        let op = f * Op::create(Mode::a(1));
        let out = op.apply(&Sv::vacuum());
        assert_eq!(out, Sv::vacuum().apply_creation(Mode::a(1)).scale(&q(1, 2)));
    }

    #[test]
    fn pow_and_identity() {
        let k = sp2r_triple::<Rational>();
        let vac = Sv::vacuum();
        assert_eq!(k.k_plus.pow(0).apply(&vac), vac);
        let twice = k.k_plus.apply(&k.k_plus.apply(&vac));
        assert_eq!(k.k_plus.pow(2).apply(&vac), twice);
        assert!(Op::zero().apply(&vac).is_zero());
    }
}
