//! Exact scalar rings.
//!
//! [`Rational`] carries every coefficient of the irrep constructions.
//! [`ExtScalar`] is the degree-4 field ℚ(i, √3), the smallest field holding
//! the Gell-Mann matrix entries and the SU(3) structure constants.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient ring of a [`StateVector`](crate::fock::StateVector).
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// Short ring name used in error messages and serialized output.
    const RING: &'static str;

    fn from_rational(r: &Rational) -> Self;

    /// Complex conjugation (i ↦ −i). The identity on real rings.
    fn conj(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_rational(&Rational::from_int(v))
    }
}

/// A reduced fraction with positive denominator over big integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical form.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = acc * self;
        }
        acc
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Rational::new(p, q)
            }
            None => Ok(Rational::from_int(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

macro_rules! rational_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div for Rational {
    type Output = Rational;
    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl<'a> AddAssign<&'a Rational> for Rational {
    fn add_assign(&mut self, rhs: &'a Rational) {
        self.0 += &rhs.0;
    }
}

impl<'a> SubAssign<&'a Rational> for Rational {
    fn sub_assign(&mut self, rhs: &'a Rational) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl Scalar for Rational {
    const RING: &'static str = "Q";

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn inv(&self) -> Option<Self> {
        self.recip()
    }
}

/// `w + x·i + y·√3 + z·i√3` with rational components.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtScalar {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl ExtScalar {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        ExtScalar { w, x, y, z }
    }

    pub fn i() -> Self {
        ExtScalar {
            x: Rational::one(),
            ..Default::default()
        }
    }

    pub fn sqrt3() -> Self {
        ExtScalar {
            y: Rational::one(),
            ..Default::default()
        }
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// `Some(w)` when the value lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.x.is_zero() && self.y.is_zero() && self.z.is_zero() {
            Some(&self.w)
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ExtScalar {
            w: &self.w * r,
            x: &self.x * r,
            y: &self.y * r,
            z: &self.z * r,
        }
    }

    fn mul_ref(&self, o: &ExtScalar) -> ExtScalar {
        // basis {1, i, s, is} with i² = −1, s² = 3
        let three = Rational::from_int(3);
        let (a, b) = (self, o);
        let w = &a.w * &b.w - &a.x * &b.x + &three * &(&a.y * &b.y) - &three * &(&a.z * &b.z);
        let x = &a.w * &b.x + &a.x * &b.w + &three * &(&a.y * &b.z) + &three * &(&a.z * &b.y);
        let y = &a.w * &b.y + &a.y * &b.w - &a.x * &b.z - &a.z * &b.x;
        let z = &a.w * &b.z + &a.z * &b.w + &a.x * &b.y + &a.y * &b.x;
        ExtScalar { w, x, y, z }
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.w, self.x, self.y, self.z)
    }
}

impl fmt::Debug for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(s.to_string()))?;
        let parts = inner
            .split(',')
            .map(|p| p.trim().trim_matches('"').parse::<Rational>())
            .collect::<Result<Vec<_>>>()?;
        match <[Rational; 4]>::try_from(parts) {
            Ok([w, x, y, z]) => Ok(ExtScalar { w, x, y, z }),
            Err(_) => Err(Error::Parse(s.to_string())),
        }
    }
}

impl Serialize for ExtScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.components().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExtScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [w, x, y, z] = <[Rational; 4]>::deserialize(deserializer)?;
        Ok(ExtScalar { w, x, y, z })
    }
}

impl From<Rational> for ExtScalar {
    fn from(w: Rational) -> Self {
        ExtScalar {
            w,
            ..Default::default()
        }
    }
}

impl Zero for ExtScalar {
    fn zero() -> Self {
        ExtScalar::default()
    }
    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl One for ExtScalar {
    fn one() -> Self {
        ExtScalar::from(Rational::one())
    }
}

impl Add for ExtScalar {
    type Output = ExtScalar;
    fn add(self, o: ExtScalar) -> ExtScalar {
        self + &o
    }
}

impl<'a> Add<&'a ExtScalar> for ExtScalar {
    type Output = ExtScalar;
    fn add(mut self, o: &'a ExtScalar) -> ExtScalar {
        self += o;
        self
    }
}

impl Sub for ExtScalar {
    type Output = ExtScalar;
    fn sub(self, o: ExtScalar) -> ExtScalar {
        self - &o
    }
}

impl<'a> Sub<&'a ExtScalar> for ExtScalar {
    type Output = ExtScalar;
    fn sub(mut self, o: &'a ExtScalar) -> ExtScalar {
        self -= o;
        self
    }
}

impl Mul for ExtScalar {
    type Output = ExtScalar;
    fn mul(self, o: ExtScalar) -> ExtScalar {
        self.mul_ref(&o)
    }
}

impl<'a> Mul<&'a ExtScalar> for ExtScalar {
    type Output = ExtScalar;
    fn mul(self, o: &'a ExtScalar) -> ExtScalar {
        self.mul_ref(o)
    }
}

impl<'a> Mul<&'a ExtScalar> for &'a ExtScalar {
    type Output = ExtScalar;
    fn mul(self, o: &'a ExtScalar) -> ExtScalar {
        self.mul_ref(o)
    }
}

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar {
            w: -self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

impl<'a> AddAssign<&'a ExtScalar> for ExtScalar {
    fn add_assign(&mut self, o: &'a ExtScalar) {
        self.w += &o.w;
        self.x += &o.x;
        self.y += &o.y;
        self.z += &o.z;
    }
}

impl<'a> SubAssign<&'a ExtScalar> for ExtScalar {
    fn sub_assign(&mut self, o: &'a ExtScalar) {
        self.w -= &o.w;
        self.x -= &o.x;
        self.y -= &o.y;
        self.z -= &o.z;
    }
}

impl Scalar for ExtScalar {
    const RING: &'static str = "Q(i,sqrt3)";

    fn from_rational(r: &Rational) -> Self {
        ExtScalar::from(r.clone())
    }

    fn conj(&self) -> Self {
        ExtScalar {
            w: self.w.clone(),
            x: -self.x.clone(),
            y: self.y.clone(),
            z: -self.z.clone(),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Write self = u + v·i with u = w + y√3, v = x + z√3 in ℚ(√3).
        // Then 1/self = (u − v·i) / (u² + v²), and u² + v² = p + q√3 is
        // inverted through its ℚ(√3)-conjugate.
        let three = Rational::from_int(3);
        let (w, x, y, z) = (&self.w, &self.x, &self.y, &self.z);
        let p = w * w + &three * &(y * y) + x * x + &three * &(z * z);
        let q = Rational::from_int(2) * &(w * y + x * z);
        let norm = &p * &p - &three * &(&q * &q);
        let norm_inv = norm.recip()?;
        // 1/(p + q√3) = (p − q√3)/norm
        let r0 = &p * &norm_inv;
        let r1 = -(q * &norm_inv);
        let recip_norm = ExtScalar::new(r0, Rational::zero(), r1, Rational::zero());
        Some(self.conj() * recip_norm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    fn ext(w: Rational, x: Rational, y: Rational, z: Rational) -> ExtScalar {
        ExtScalar::new(w, x, y, z)
    }

    #[test]
    fn normalize_reduces_and_fixes_sign() {
        assert_eq!(q(2, 4).to_string(), "1/2");
        let r = q(3, -9);
        assert_eq!(r.to_string(), "-1/3");
        assert!(r.denom() > &BigInt::zero());
        let z = q(0, 7);
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn zero_denominator_is_domain_error() {
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
        assert!("3/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "5", "-1/3", "22/7"] {
            assert_eq!(s.parse::<Rational>().unwrap().to_string(), s);
        }
        assert_eq!(serde_json::to_string(&q(-2, 6)).unwrap(), "\"-1/3\"");
    }

    #[test]
    fn multiplication_table() {
        let i = ExtScalar::i();
        let s = ExtScalar::sqrt3();
        assert_eq!(i.clone() * i.clone(), -ExtScalar::one());
        assert_eq!(s.clone() * s.clone(), ExtScalar::from_int(3));
        // (1 + i√3)(1 − i√3) = 1 − (i√3)² = 1 + 3
        let one = Rational::one();
        let zero = Rational::zero();
        let a = ext(one.clone(), zero.clone(), zero.clone(), one.clone());
        let b = ext(one.clone(), zero.clone(), zero.clone(), -one.clone());
        assert_eq!(a * b, ExtScalar::from_int(4));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let a = ext(q(1, 2), q(-3, 1), q(2, 7), q(1, 1));
        let inv = a.inv().unwrap();
        assert_eq!(a * inv, ExtScalar::one());
        assert!(ExtScalar::zero().inv().is_none());
    }

    #[test]
    fn ext_serialization_is_four_strings() {
        let a = ext(q(1, 2), q(0, 1), q(-1, 3), q(4, 1));
        assert_eq!(a.to_string(), "[1/2, 0, -1/3, 4]");
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"["1/2","0","-1/3","4"]"#
        );
        assert_eq!(a.to_string().parse::<ExtScalar>().unwrap(), a);
    }

    #[test]
    fn conjugation_fixes_sqrt3() {
        let s = ExtScalar::sqrt3();
        assert_eq!(s.conj(), s);
        assert_eq!(ExtScalar::i().conj(), -ExtScalar::i());
    }
}
