//! Exact scalars: rationals, the quadratic field ℚ(√2) and the parameter
//! ring ℚ(√2)[k, ω, ν, α].

mod coeff;
mod quad;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use coeff::{Bindings, Coeff, Param, ParamMono};
pub use quad::QuadNum;
pub(crate) use quad::rat_to_f64;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

pub trait Field: Ring {
    fn try_inv(&self) -> Option<Self>;
}

impl Ring for Rational {}

impl Field for Rational {
    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
