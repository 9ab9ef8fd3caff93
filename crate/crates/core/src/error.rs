use thiserror::Error;

use crate::scalar::Param;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} mismatch: {left} vs {right}")]
    DimensionMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("formal parameter(s) {0:?} must be bound to numbers here")]
    UnboundParameter(Vec<Param>),

    /// `apply(op, basis[index])` left the span; `residual` is a textual
    /// rendering of the component outside it.
    #[error("not invariant: image of basis vector {index} leaves the span (residual {residual})")]
    NotInvariant { index: usize, residual: String },

    #[error("not invariant under cap: degree {found} exceeds cap {cap} after {dim_so_far} vectors")]
    DegreeCapExceeded { cap: u32, found: u32, dim_so_far: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(what: &'static str, left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { what, left, right })
    }
}
