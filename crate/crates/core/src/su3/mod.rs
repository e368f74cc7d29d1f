//! SU(3) irreducible representations `(n, m)` in the two-triplet Fock space.
//!
//! Three independent constructions are provided:
//!
//! * [`irrep_explicit`]: the traceless tensor expansion, a signed sum over
//!   index contractions weighted by [`coefficient_big_l`].
//! * [`projection_apply`]: the polynomial projector `Σ l_r k₊^r k₋^r`
//!   acting on the bare tensor monomial.
//! * [`irrep_isb`]: products of the irreducible Schwinger boson creation
//!   operators `A†`, `B†` on the vacuum.
//!
//! All three must agree exactly for every request.

mod construct;
mod isb;
mod properties;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_index, Error, Result};
use crate::fock::StateVector;
use crate::scalar::Rational;

pub use construct::{
    coefficient_big_l, coefficient_l, irrep_explicit, pairing_patterns, projection_apply,
    projector, tensor_monomial, PairingPattern,
};
pub use isb::{irrep_isb, IsbOperators};
pub(crate) use properties::ladder_check_with;
pub use properties::{
    dimension, gram_rank, ladder_check, sp2r_weight, span_basis, tower_state, trace_contract,
    trace_contract_with, Sp2rWeight,
};

/// Upper (triplet) and lower (anti-triplet) index tuples of a tensor
/// component, each index in 1..=3.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrepRequest {
    upper: Vec<u8>,
    lower: Vec<u8>,
}

impl IrrepRequest {
    /// Checks that the tuple lengths match `(n, m)` and every index is in 1..=3.
    pub fn new(n: usize, m: usize, upper: Vec<u8>, lower: Vec<u8>) -> Result<Self> {
        if upper.len() != n || lower.len() != m {
            return Err(Error::Domain(format!(
                "index tuples have lengths ({}, {}) but the label is ({n}, {m})",
                upper.len(),
                lower.len()
            )));
        }
        Self::from_indices(upper, lower)
    }

    pub fn from_indices(upper: Vec<u8>, lower: Vec<u8>) -> Result<Self> {
        for &i in &upper {
            check_index("upper index", i as i64, 1, 3)?;
        }
        for &i in &lower {
            check_index("lower index", i as i64, 1, 3)?;
        }
        Ok(IrrepRequest { upper, lower })
    }

    pub fn n(&self) -> usize {
        self.upper.len()
    }

    pub fn m(&self) -> usize {
        self.lower.len()
    }

    /// `q = min(n, m)`, the largest number of contractions.
    pub fn q(&self) -> usize {
        self.n().min(self.m())
    }

    pub fn upper(&self) -> &[u8] {
        &self.upper
    }

    pub fn lower(&self) -> &[u8] {
        &self.lower
    }

    pub fn with_upper(&self, pos: usize, value: u8) -> Self {
        let mut r = self.clone();
        r.upper[pos] = value;
        r
    }

    pub fn with_lower(&self, pos: usize, value: u8) -> Self {
        let mut r = self.clone();
        r.lower[pos] = value;
        r
    }

    /// Every request with label `(n, m)`: `3^n · 3^m` of them, in
    /// lexicographic order of `(upper, lower)`.
    pub fn all(n: usize, m: usize) -> Vec<IrrepRequest> {
        let uppers = index_tuples(n);
        let lowers = index_tuples(m);
        let mut out = Vec::with_capacity(uppers.len() * lowers.len());
        for u in &uppers {
            for l in &lowers {
                out.push(IrrepRequest {
                    upper: u.clone(),
                    lower: l.clone(),
                });
            }
        }
        out
    }
}

impl fmt::Display for IrrepRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u8]| {
            v.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "({},{})^[{}]_[{}]",
            self.n(),
            self.m(),
            join(&self.upper),
            join(&self.lower)
        )
    }
}

/// All tuples in `{1,2,3}^len`, lexicographic.
pub fn index_tuples(len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=3u8).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Explicit,
    Projection,
    Isb,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Explicit, Method::Projection, Method::Isb];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Explicit => "explicit",
            Method::Projection => "projection",
            Method::Isb => "isb",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "explicit" => Ok(Method::Explicit),
            "projection" => Ok(Method::Projection),
            "isb" => Ok(Method::Isb),
            other => Err(Error::Domain(format!("unknown method {other:?}"))),
        }
    }
}

/// A constructed irrep basis state together with how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepState {
    pub request: IrrepRequest,
    pub vector: StateVector<Rational>,
    pub method: Method,
}

impl IrrepState {
    pub fn build(request: &IrrepRequest, method: Method) -> IrrepState {
        match method {
            Method::Explicit => irrep_explicit(request),
            Method::Projection => projection_apply(request),
            Method::Isb => irrep_isb(request),
        }
    }
}

#[derive(Serialize)]
struct IrrepStateJson<'a> {
    label: [usize; 2],
    upper: &'a [u8],
    lower: &'a [u8],
    method: Method,
    terms: &'a StateVector<Rational>,
}

impl Serialize for IrrepState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IrrepStateJson {
            label: [self.request.n(), self.request.m()],
            upper: self.request.upper(),
            lower: self.request.lower(),
            method: self.method,
            terms: &self.vector,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn request_validation() {
        assert!(IrrepRequest::new(1, 1, vec![1], vec![2]).is_ok());
        assert!(matches!(
            IrrepRequest::new(2, 1, vec![1], vec![2]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            IrrepRequest::new(1, 0, vec![4], vec![]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(IrrepRequest::new(0, 0, vec![], vec![]).is_ok());
    }

    #[test]
    fn enumeration() {
        assert_eq!(IrrepRequest::all(2, 1).len(), 27);
        assert_eq!(IrrepRequest::all(0, 0).len(), 1);
        let r = IrrepRequest::from_indices(vec![1, 2], vec![3]).unwrap();
        assert_eq!(r.to_string(), "(2,1)^[1,2]_[3]");
        assert_eq!(r.q(), 1);
    }

    #[test]
    fn method_parse() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("svd".parse::<Method>().is_err());
    }
}
