//! The two-triplet bosonic Fock space in the unnormalized monomial basis.
//!
//! A basis vector is a product of creation operators `a†^α` (triplet) and
//! `b†_α` (anti-triplet) on the vacuum, written without `1/√n!` factors.
//! Creation acts by raising an exponent, annihilation as a formal
//! derivative, and the factorial weights live in the inner product.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{check_index, Error, Result};
use crate::scalar::{ExtScalar, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Species {
    /// Triplet oscillators `a†^α`.
    A,
    /// Anti-triplet oscillators `b†_α`.
    B,
}

/// One of the six oscillator modes. `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode {
    species: Species,
    index: u8,
}

impl Mode {
    pub fn new(species: Species, index: usize) -> Result<Self> {
        check_index("mode index", index as i64, 1, 3)?;
        Ok(Mode {
            species,
            index: index as u8,
        })
    }

    /// Triplet mode `a^α`. Panics unless `index` is in 1..=3.
    pub fn a(index: usize) -> Self {
        Mode::new(Species::A, index).expect("triplet index in 1..=3")
    }

    /// Anti-triplet mode `b_α`. Panics unless `index` is in 1..=3.
    pub fn b(index: usize) -> Self {
        Mode::new(Species::B, index).expect("anti-triplet index in 1..=3")
    }

    pub fn species(self) -> Species {
        self.species
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn all() -> impl Iterator<Item = Mode> {
        [Species::A, Species::B]
            .into_iter()
            .flat_map(|s| (1..=3).map(move |i| Mode::new(s, i).unwrap()))
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.species {
            Species::A => write!(f, "a{}", self.index),
            Species::B => write!(f, "b{}", self.index),
        }
    }
}

/// Exponent vector of the six creation operators. The derived ordering is
/// lexicographic on `(a1, a2, a3, b1, b2, b3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FockMonomial {
    pub a: [u32; 3],
    pub b: [u32; 3],
}

impl FockMonomial {
    pub const VACUUM: FockMonomial = FockMonomial {
        a: [0; 3],
        b: [0; 3],
    };

    pub fn new(a: [u32; 3], b: [u32; 3]) -> Self {
        FockMonomial { a, b }
    }

    pub fn n_a(&self) -> u32 {
        self.a.iter().sum()
    }

    pub fn n_b(&self) -> u32 {
        self.b.iter().sum()
    }

    pub fn total(&self) -> u32 {
        self.n_a() + self.n_b()
    }

    pub fn exponent(&self, mode: Mode) -> u32 {
        match mode.species {
            Species::A => self.a[mode.index() - 1],
            Species::B => self.b[mode.index() - 1],
        }
    }

    fn exponent_mut(&mut self, mode: Mode) -> &mut u32 {
        match mode.species {
            Species::A => &mut self.a[mode.index() - 1],
            Species::B => &mut self.b[mode.index() - 1],
        }
    }

    pub fn raised(mut self, mode: Mode) -> Self {
        *self.exponent_mut(mode) += 1;
        self
    }

    /// `None` when the targeted exponent is already zero.
    pub fn lowered(mut self, mode: Mode) -> Option<Self> {
        let e = self.exponent_mut(mode);
        if *e == 0 {
            None
        } else {
            *e -= 1;
            Some(self)
        }
    }

    /// `∏ eᵢ!` over all six modes: the squared norm of the monomial.
    pub fn factorial_weight(&self) -> BigInt {
        let mut w = BigInt::one();
        for &e in self.a.iter().chain(self.b.iter()) {
            for k in 2..=e {
                w *= k;
            }
        }
        w
    }

    /// All monomials with `N_a = n_a` and `N_b = n_b`, in ascending order.
    pub fn sector(n_a: u32, n_b: u32) -> Vec<FockMonomial> {
        let mut out = Vec::new();
        for a in compositions(n_a) {
            for b in compositions(n_b) {
                out.push(FockMonomial { a, b });
            }
        }
        out.sort();
        out
    }

    /// All monomials with total occupation `≤ max_total`, in ascending order.
    pub fn up_to(max_total: u32) -> Vec<FockMonomial> {
        let mut out = Vec::new();
        for t in 0..=max_total {
            for n_a in 0..=t {
                out.extend(FockMonomial::sector(n_a, t - n_a));
            }
        }
        out.sort();
        out
    }
}

/// Ordered triples of non-negative integers summing to `n`.
fn compositions(n: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=(n - i) {
            out.push([i, j, n - i - j]);
        }
    }
    out
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3] = self.a;
        let [b1, b2, b3] = self.b;
        write!(f, "{a1} {a2} {a3} | {b1} {b2} {b3}")
    }
}

/// A finite linear combination of monomials. Zero coefficients are never
/// stored, so structural equality is vector equality.
#[derive(Clone, PartialEq, Eq)]
pub struct StateVector<S> {
    terms: BTreeMap<FockMonomial, S>,
}

impl<S: Scalar> Default for StateVector<S> {
    fn default() -> Self {
        StateVector::zero()
    }
}

impl<S: Scalar> StateVector<S> {
    pub fn zero() -> Self {
        StateVector {
            terms: BTreeMap::new(),
        }
    }

    /// `|0⟩`
    pub fn vacuum() -> Self {
        StateVector::monomial(FockMonomial::VACUUM)
    }

    pub fn monomial(m: FockMonomial) -> Self {
        StateVector::from_term(m, S::one())
    }

    pub fn from_term(m: FockMonomial, c: S) -> Self {
        let mut s = StateVector::zero();
        s.add_term(m, c);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (FockMonomial, S)>) -> Self {
        let mut s = StateVector::zero();
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn add_term(&mut self, m: FockMonomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &FockMonomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in ascending monomial order.
    pub fn iter(&self) -> btree_map::Iter<'_, FockMonomial, S> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &FockMonomial> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return StateVector::zero();
        }
        StateVector {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v.clone() * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        StateVector {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    /// Multiplies every term by the creation operator of `mode`.
    pub fn apply_creation(&self, mode: Mode) -> Self {
        StateVector {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.raised(mode), c.clone()))
                .collect(),
        }
    }

    /// Formal derivative with respect to the creation operator of `mode`.
    pub fn apply_annihilation(&self, mode: Mode) -> Self {
        let mut out = StateVector::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(mode);
            if let Some(lower) = m.lowered(mode) {
                out.add_term(lower, c.clone() * S::from_int(e as i64));
            }
        }
        out
    }

    /// Splits into parts of definite `(N_a, N_b)`, ordered by `(N_a, N_b)`.
    pub fn occupation_split(&self) -> Vec<(u32, u32, StateVector<S>)> {
        let mut parts: BTreeMap<(u32, u32), StateVector<S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry((m.n_a(), m.n_b()))
                .or_insert_with(StateVector::zero)
                .terms
                .insert(*m, c.clone());
        }
        parts.into_iter().map(|((a, b), s)| (a, b, s)).collect()
    }

    /// `(N_a, N_b)` when every term shares it; `None` for mixed or zero vectors.
    pub fn occupation(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|m| (m.n_a(), m.n_b()));
        let first = it.next()?;
        it.all(|o| o == first).then_some(first)
    }

    /// Common total occupation `N_a + N_b`, if any.
    pub fn total_occupation(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(FockMonomial::total);
        let first = it.next()?;
        it.all(|t| t == first).then_some(first)
    }

    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> StateVector<T> {
        StateVector::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Canonical JSON term list, sorted by monomial order.
    pub fn to_terms(&self) -> Vec<Term<S>>
    where
        S: Serialize,
    {
        self.terms
            .iter()
            .map(|(m, c)| Term {
                mono: [m.a, m.b],
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_term_list(terms: Vec<Term<S>>) -> Self {
        StateVector::from_terms(
            terms
                .into_iter()
                .map(|t| (FockMonomial::new(t.mono[0], t.mono[1]), t.coeff)),
        )
    }
}

impl StateVector<Rational> {
    pub fn to_ext(&self) -> StateVector<ExtScalar> {
        self.map_scalar(ExtScalar::from_rational)
    }
}

impl<S: Scalar> fmt::Debug for StateVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·[{m}]")?;
        }
        Ok(())
    }
}

/// Serialized form of one term: `{"mono": [[a1,a2,a3],[b1,b2,b3]], "coeff": ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term<S> {
    pub mono: [[u32; 3]; 2],
    pub coeff: S,
}

impl<S: Scalar + Serialize> Serialize for StateVector<S> {
    fn serialize<Ser: serde::Serializer>(
        &self,
        serializer: Ser,
    ) -> std::result::Result<Ser::Ok, Ser::Error> {
        self.to_terms().serialize(serializer)
    }
}

impl<'de, S: Scalar + DeserializeOwned> Deserialize<'de> for StateVector<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(StateVector::from_term_list(Vec::<Term<S>>::deserialize(d)?))
    }
}

/// `⟨s1|s2⟩` under the factorial-weighted inner product, antilinear in `s1`.
pub fn inner_product<S: Scalar>(s1: &StateVector<S>, s2: &StateVector<S>) -> S {
    let (small, large, conj_small) = if s1.len() <= s2.len() {
        (s1, s2, true)
    } else {
        (s2, s1, false)
    };
    let mut acc = S::zero();
    for (m, c) in small.iter() {
        if let Some(d) = large.terms.get(m) {
            let w = S::from_rational(&Rational::from_int(m.factorial_weight()));
            let term = if conj_small {
                c.conj() * d
            } else {
                d.conj() * c
            };
            acc += &(term * &w);
        }
    }
    acc
}

/// A state whose scalar ring is only known at run time, e.g. after decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DynState {
    Rational(StateVector<Rational>),
    Ext(StateVector<ExtScalar>),
}

impl DynState {
    pub fn ring(&self) -> &'static str {
        match self {
            DynState::Rational(_) => Rational::RING,
            DynState::Ext(_) => ExtScalar::RING,
        }
    }

    /// Inner product of two states over the same ring.
    pub fn inner_product(&self, other: &DynState) -> Result<ExtScalar> {
        match (self, other) {
            (DynState::Rational(x), DynState::Rational(y)) => Ok(inner_product(x, y).into()),
            (DynState::Ext(x), DynState::Ext(y)) => Ok(inner_product(x, y)),
            _ => Err(Error::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Sv = StateVector<Rational>;

    fn mono(a: [u32; 3], b: [u32; 3]) -> FockMonomial {
        FockMonomial::new(a, b)
    }

    fn q(p: i64) -> Rational {
        Rational::from_int(p)
    }

    #[test]
    fn creation_examples() {
        let s = Sv::vacuum().apply_creation(Mode::a(1));
        assert_eq!(s, Sv::monomial(mono([1, 0, 0], [0; 3])));
        let s2 = s.apply_creation(Mode::b(2));
        assert_eq!(s2, Sv::monomial(mono([1, 0, 0], [0, 1, 0])));
        let sq = Sv::monomial(mono([2, 0, 0], [0; 3])).apply_creation(Mode::a(1));
        assert_eq!(sq, Sv::monomial(mono([3, 0, 0], [0; 3])));
    }

    #[test]
    fn annihilation_examples() {
        assert!(Sv::vacuum().apply_annihilation(Mode::a(1)).is_zero());
        let s = Sv::monomial(mono([2, 0, 0], [0; 3])).apply_annihilation(Mode::a(1));
        assert_eq!(s, Sv::from_term(mono([1, 0, 0], [0; 3]), q(2)));
        let t = Sv::monomial(mono([1, 0, 0], [0, 0, 1])).apply_annihilation(Mode::b(3));
        assert_eq!(t, Sv::monomial(mono([1, 0, 0], [0; 3])));
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(inner_product(&Sv::vacuum(), &Sv::vacuum()), q(1));
        let sq = Sv::monomial(mono([2, 0, 0], [0; 3]));
        assert_eq!(inner_product(&sq, &sq), q(2));
        let ab = Sv::monomial(mono([1, 0, 0], [0, 1, 0]));
        assert_eq!(inner_product(&ab, &ab), q(1));
        assert_eq!(inner_product(&ab, &sq), q(0));
    }

    #[test]
    fn ext_inner_product_is_sesquilinear() {
        let i = ExtScalar::i();
        let v = StateVector::<ExtScalar>::from_term(FockMonomial::VACUUM, i.clone());
        // ⟨i·0|i·0⟩ = conj(i)·i = 1
        assert_eq!(inner_product(&v, &v), ExtScalar::one());
        let w = StateVector::<ExtScalar>::vacuum();
        assert_eq!(inner_product(&v, &w), -i.clone());
        assert_eq!(inner_product(&w, &v), i);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = DynState::Rational(Sv::vacuum());
        let e = DynState::Ext(StateVector::vacuum());
        assert!(matches!(
            r.inner_product(&e),
            Err(Error::RingMismatch { .. })
        ));
        assert_eq!(r.inner_product(&r).unwrap(), ExtScalar::one());
    }

    #[test]
    fn occupation_split_examples() {
        let v = Sv::vacuum();
        assert_eq!(v.occupation_split(), vec![(0, 0, v.clone())]);
        let ab = Sv::monomial(mono([1, 0, 0], [0, 1, 0]));
        assert_eq!(ab.occupation_split(), vec![(1, 1, ab.clone())]);
        let a1 = Sv::monomial(mono([1, 0, 0], [0; 3]));
        let a12 = Sv::monomial(mono([1, 1, 0], [0; 3]));
        let mixed = a1.add(&a12);
        let parts = mixed.occupation_split();
        assert_eq!(parts, vec![(1, 0, a1), (2, 0, a12)]);
        assert_eq!(mixed.occupation(), None);
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let m = mono([1, 0, 0], [0; 3]);
        let mut s = Sv::from_term(m, q(3));
        s.add_term(m, q(-3));
        assert!(s.is_zero());
        assert_eq!(s, Sv::zero());
        assert!(Sv::vacuum().scale(&q(0)).is_zero());
    }

    #[test]
    fn monomial_display_and_order() {
        let m = mono([1, 2, 0], [0, 0, 3]);
        assert_eq!(m.to_string(), "1 2 0 | 0 0 3");
        assert!(mono([0, 0, 1], [0; 3]) < mono([0, 1, 0], [0; 3]));
        assert!(mono([0, 0, 0], [5, 0, 0]) < mono([0, 0, 1], [0; 3]));
    }

    #[test]
    fn enumeration_counts() {
        // C(t+5, 5) monomials of total t in six modes
        assert_eq!(FockMonomial::up_to(6).len(), 924);
        assert_eq!(FockMonomial::sector(2, 2).len(), 36);
        let all = FockMonomial::up_to(3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn json_shape() {
        let s = Sv::from_terms([
            (mono([0, 1, 0], [0, 1, 0]), Rational::new(-1, 3).unwrap()),
            (mono([1, 0, 0], [1, 0, 0]), Rational::new(2, 3).unwrap()),
        ]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"[{"mono":[[0,1,0],[0,1,0]],"coeff":"-1/3"},{"mono":[[1,0,0],[1,0,0]],"coeff":"2/3"}]"#
        );
        let back: Sv = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
