use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Field, Rational, Ring};

/// An element `a + b·√2` of the real quadratic field ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QuadNum {
    pub a: Rational,
    pub b: Rational,
}

impl QuadNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadNum { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        QuadNum { a, b: Rational::zero() }
    }

    pub fn int(n: i64) -> Self {
        QuadNum::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        QuadNum::rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// `√2`.
    pub fn sqrt2() -> Self {
        QuadNum { a: Rational::zero(), b: Rational::one() }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugate `a − b·√2`.
    pub fn conj(&self) -> Self {
        QuadNum { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(2)) * &self.b * &self.b
    }

    /// Exact sign as a real number.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with 2b²
        let n = self.norm();
        match sign_of(&n) {
            0 => 0,
            1 => sa,
            _ => sb,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * std::f64::consts::SQRT_2
    }

    /// A rational number `r` with `|self| ≤ r`.
    pub fn abs_upper_bound(&self) -> Rational {
        // √2 < 3/2
        self.a.abs() + self.b.abs() * Rational::new(BigInt::from(3), BigInt::from(2))
    }

    /// Returns `Some(s)` with `s² = r` when a square root of the rational `r`
    /// exists in ℚ(√2).
    pub fn sqrt_of_rational(r: &Rational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if let Some(s) = rational_sqrt(r) {
            return Some(QuadNum::rational(s));
        }
        let half = r / Rational::from_integer(BigInt::from(2));
        rational_sqrt(&half).map(|s| QuadNum { a: Rational::zero(), b: s })
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Serialized as the exact pair `["a", "b"]` of rational strings.
impl Serialize for QuadNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.a.to_string(), self.b.to_string()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (a, b) = <(String, String)>::deserialize(d)?;
        let parse = |t: &str| t.parse::<Rational>().map_err(serde::de::Error::custom);
        Ok(QuadNum::new(parse(&a)?, parse(&b)?))
    }
}

pub(crate) fn rat_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum().cmp(&0)
    }
}

impl Add for QuadNum {
    type Output = QuadNum;
    fn add(self, o: QuadNum) -> QuadNum {
        QuadNum { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for QuadNum {
    type Output = QuadNum;
    fn sub(self, o: QuadNum) -> QuadNum {
        QuadNum { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Mul for QuadNum {
    type Output = QuadNum;
    fn mul(self, o: QuadNum) -> QuadNum {
        &self * &o
    }
}

impl<'a> Mul<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn mul(self, o: &QuadNum) -> QuadNum {
        let two = Rational::from_integer(BigInt::from(2));
        QuadNum {
            a: &self.a * &o.a + two * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl<'a> Add<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn add(self, o: &QuadNum) -> QuadNum {
        QuadNum { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { a: -self.a, b: -self.b }
    }
}

impl Div for QuadNum {
    type Output = QuadNum;
    fn div(self, o: QuadNum) -> QuadNum {
        self * o.try_inv().expect("division by zero in Q(sqrt2)")
    }
}

impl Zero for QuadNum {
    fn zero() -> Self {
        QuadNum::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadNum {
    fn one() -> Self {
        QuadNum::int(1)
    }
}

impl Ring for QuadNum {}

impl Field for QuadNum {
    fn try_inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QuadNum { a: &self.a / &n, b: -(&self.b / &n) })
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if self.b.is_one() {
                    write!(f, "sqrt2")
                } else if (-self.b.clone()).is_one() {
                    write!(f, "-sqrt2")
                } else {
                    write!(f, "{}*sqrt2", self.b)
                }
            }
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "({} - {}*sqrt2)", self.a, -self.b.clone())
                } else {
                    write!(f, "({} + {}*sqrt2)", self.a, self.b)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_norm() {
        let u = QuadNum::int(1) + QuadNum::sqrt2();
        let v = QuadNum::int(1) - QuadNum::sqrt2();
        assert_eq!(u.clone() * v, QuadNum::int(-1));
        assert_eq!(u.norm(), Rational::from_integer((-1).into()));
    }

    #[test]
    fn inverse_and_sign() {
        let x = QuadNum::new(Rational::from_integer(3.into()), Rational::from_integer((-2).into()));
        // 3 - 2√2 ≈ 0.17
        assert_eq!(x.signum(), 1);
        let inv = x.try_inv().unwrap();
        assert_eq!(x * inv, QuadNum::one());
        let y = QuadNum::new(Rational::from_integer(1.into()), Rational::from_integer((-1).into()));
        assert_eq!(y.signum(), -1);
        assert!(QuadNum::zero().try_inv().is_none());
    }

    #[test]
    fn ordering_matches_floats() {
        let vals = [
            QuadNum::int(2),
            QuadNum::sqrt2(),
            QuadNum::frac(7, 5),
            QuadNum::frac(3, 2),
            -QuadNum::sqrt2(),
        ];
        for a in &vals {
            for b in &vals {
                let exact = a.cmp(b);
                let approx = a.to_f64().partial_cmp(&b.to_f64()).unwrap();
                assert_eq!(exact, approx, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn square_roots_in_field() {
        assert_eq!(QuadNum::sqrt_of_rational(&Rational::from_integer(2.into())), Some(QuadNum::sqrt2()));
        assert_eq!(QuadNum::sqrt_of_rational(&Rational::from_integer(4.into())), Some(QuadNum::int(2)));
        assert_eq!(QuadNum::sqrt_of_rational(&Rational::from_integer(3.into())), None);
        let s = QuadNum::sqrt_of_rational(&Rational::from_integer(8.into())).unwrap();
        assert_eq!(s.clone() * s, QuadNum::int(8));
    }
}
