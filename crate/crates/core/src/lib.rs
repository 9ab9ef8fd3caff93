//! Exact mixed (matrix + differential operator) representations of
//! `gl(n+1)` and of the polynomial algebras `g(m)`, identity checking in the
//! enveloping algebra, invariant polynomial spaces, and exact spectra of the
//! matrix Calogero and Sutherland operators built from them.

pub mod error;
pub mod linalg;
pub mod models;
pub mod reps;
pub mod repspace;
pub mod roots;
pub mod scalar;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use scalar::{Bindings, Coeff, Param, QuadNum, Rational};
pub use weyl::{DiffMonomial, MatrixDiffOp, PolySpinor, Polynomial, ScalarDiffOp};
