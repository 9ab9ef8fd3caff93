//! Normal-ordered Weyl algebra with matrix coefficients and its action on
//! polynomial spinors.

mod matrix_op;
mod scalar_op;
mod spinor;

pub use matrix_op::{MatrixDiffOp, OpKey};
pub use scalar_op::{DiffMonomial, ScalarDiffOp};
pub use spinor::{PolySpinor, Polynomial};

