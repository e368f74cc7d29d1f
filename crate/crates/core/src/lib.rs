//! Exact construction of SU(3) irreducible representations with Schwinger
//! bosons.
//!
//! Two oscillator triplets, `a†^α` (the 3) and `b†_α` (the 3*), span a Fock
//! space carrying every SU(3) irrep `(n, m)`. This crate builds the irrep
//! states three independent ways and checks the surrounding operator
//! identities with exact rational arithmetic.

pub mod algebra;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod operator;
pub mod report;
pub mod scalar;
pub mod su2;
pub mod su3;
pub mod verify;

pub use error::{Error, Result};
pub use fock::{inner_product, FockMonomial, Mode, Species, StateVector};
pub use operator::{commutator, sp2r_triple, LinearOperator, NumberFunction};
pub use scalar::{ExtScalar, Rational, Scalar};
pub use su3::{IrrepRequest, IrrepState, Method};
