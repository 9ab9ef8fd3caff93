use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use super::{QuadNum, Rational, Ring};

/// Formal parameters of the coefficient ring, in canonical order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    K,
    Omega,
    Nu,
    Alpha,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::K, Param::Omega, Param::Nu, Param::Alpha];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::K => "k",
            Param::Omega => "omega",
            Param::Nu => "nu",
            Param::Alpha => "alpha",
        }
    }
}

impl FromStr for Param {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "k" => Ok(Param::K),
            "omega" | "w" => Ok(Param::Omega),
            "nu" => Ok(Param::Nu),
            "alpha" => Ok(Param::Alpha),
            other => Err(format!("unknown parameter `{other}`")),
        }
    }
}

/// Partial evaluation map for [`Coeff::substitute`].
pub type Bindings = BTreeMap<Param, Rational>;

/// Exponents of `(k, ω, ν, α)`; derived `Ord` is lexicographic in that order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct ParamMono(pub [u32; 4]);

impl ParamMono {
    pub fn var(p: Param) -> Self {
        let mut e = [0; 4];
        e[p.index()] = 1;
        ParamMono(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, o: &ParamMono) -> ParamMono {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(o.0) {
            *a += b;
        }
        ParamMono(e)
    }
}

/// Element of ℚ(√2)[k, ω, ν, α]. Zero coefficients are never stored.
/// Serialized as a list of `(exponents, value)` pairs.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(from = "Vec<(ParamMono, QuadNum)>", into = "Vec<(ParamMono, QuadNum)>")]
pub struct Coeff {
    terms: BTreeMap<ParamMono, QuadNum>,
}

impl From<Vec<(ParamMono, QuadNum)>> for Coeff {
    fn from(v: Vec<(ParamMono, QuadNum)>) -> Self {
        Coeff::from_terms(v)
    }
}

impl From<Coeff> for Vec<(ParamMono, QuadNum)> {
    fn from(c: Coeff) -> Self {
        c.terms.into_iter().collect()
    }
}

impl Coeff {
    pub fn from_terms(terms: impl IntoIterator<Item = (ParamMono, QuadNum)>) -> Self {
        let mut map: BTreeMap<ParamMono, QuadNum> = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut map, m, c);
        }
        Coeff { terms: map }
    }

    pub fn constant(c: QuadNum) -> Self {
        Coeff::from_terms([(ParamMono::default(), c)])
    }

    pub fn int(n: i64) -> Self {
        Coeff::constant(QuadNum::int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Coeff::constant(QuadNum::frac(n, d))
    }

    pub fn rational(r: Rational) -> Self {
        Coeff::constant(QuadNum::rational(r))
    }

    pub fn sqrt2() -> Self {
        Coeff::constant(QuadNum::sqrt2())
    }

    pub fn param(p: Param) -> Self {
        Coeff::from_terms([(ParamMono::var(p), QuadNum::one())])
    }

    pub fn k() -> Self {
        Coeff::param(Param::K)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMono, &QuadNum)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when no formal parameter occurs.
    pub fn as_constant(&self) -> Option<QuadNum> {
        match self.terms.len() {
            0 => Some(QuadNum::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn scale(&self, s: &QuadNum) -> Coeff {
        if s.is_zero() {
            return Coeff::zero();
        }
        Coeff {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Parameters occurring with non-zero exponent.
    pub fn params(&self) -> Vec<Param> {
        Param::ALL
            .into_iter()
            .filter(|p| self.terms.keys().any(|m| m.0[p.index()] > 0))
            .collect()
    }

    /// Partial evaluation; unbound parameters stay formal.
    pub fn substitute(&self, bindings: &Bindings) -> Coeff {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut factor = Rational::one();
            let mut rest = *m;
            for (p, v) in bindings {
                let e = m.0[p.index()];
                if e > 0 {
                    factor *= Pow::pow(v, e);
                    rest.0[p.index()] = 0;
                }
            }
            accumulate(&mut out, rest, c * &QuadNum::rational(factor));
        }
        Coeff { terms: out }
    }

    /// Coefficient of a given parameter monomial.
    pub fn coefficient(&self, m: &ParamMono) -> QuadNum {
        self.terms.get(m).cloned().unwrap_or_default()
    }
}

fn accumulate(map: &mut BTreeMap<ParamMono, QuadNum>, m: ParamMono, c: QuadNum) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(v) => {
            *v = v.clone() + c;
            if v.is_zero() {
                map.remove(&m);
            }
        }
        None => {
            map.insert(m, c);
        }
    }
}

impl From<QuadNum> for Coeff {
    fn from(c: QuadNum) -> Self {
        Coeff::constant(c)
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::int(n)
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        Coeff { terms }
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            accumulate(&mut terms, *m, -c.clone());
        }
        Coeff { terms }
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                accumulate(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Coeff { terms }
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, o: Coeff) -> Coeff {
        &self + &o
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, o: Coeff) -> Coeff {
        &self - &o
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, o: Coeff) -> Coeff {
        &self * &o
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -self.clone()
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::int(1)
    }
}

impl Ring for Coeff {}

fn fmt_mono(m: &ParamMono) -> String {
    let mut parts = Vec::new();
    for p in Param::ALL {
        match m.0[p.index()] {
            0 => {}
            1 => parts.push(p.name().to_string()),
            e => parts.push(format!("{}^{}", p.name(), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (neg, mag) = if c.is_rational() && c.signum() < 0 {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", fmt_mono(m))?;
            } else {
                write!(f, "{mag}*{}", fmt_mono(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn product_of_conjugate_units() {
        let a = Coeff::int(1) + Coeff::sqrt2();
        let b = Coeff::int(1) - Coeff::sqrt2();
        assert_eq!(a * b, Coeff::int(-1));
    }

    #[test]
    fn fractions_add_to_one() {
        assert_eq!(Coeff::frac(2, 3) + Coeff::frac(1, 3), Coeff::one());
    }

    #[test]
    fn scalar_casimir_value_at_two() {
        let k = Coeff::k();
        let c2 = &k * &(&k + &Coeff::int(2));
        let b: Bindings = [(Param::K, rat(2))].into();
        assert_eq!(c2.substitute(&b), Coeff::int(8));
    }

    #[test]
    fn partial_substitution_keeps_free_params() {
        let e = Coeff::k() * Coeff::param(Param::Omega) + Coeff::param(Param::Nu);
        let b: Bindings = [(Param::K, rat(3))].into();
        let s = e.substitute(&b);
        assert_eq!(s, Coeff::int(3) * Coeff::param(Param::Omega) + Coeff::param(Param::Nu));
        assert_eq!(s.params(), vec![Param::Omega, Param::Nu]);
        assert_eq!(e.substitute(&Bindings::new()), e);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let k = Coeff::k();
        let z = &k - &k;
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn display_is_readable() {
        let c = Coeff::k() * Coeff::k() - Coeff::int(2) * Coeff::k() + Coeff::sqrt2();
        assert_eq!(c.to_string(), "sqrt2 - 2*k + k^2");
    }
}
