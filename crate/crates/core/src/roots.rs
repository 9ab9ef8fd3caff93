//! Univariate polynomials over ℚ(√2): exact division, square-free
//! factorization, Sturm real-root isolation, exact rational roots and
//! approximate complex roots.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::scalar::{Field, QuadNum, Rational};

/// Dense polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    c: Vec<QuadNum>,
}

impl UPoly {
    pub fn new(mut c: Vec<QuadNum>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn coeffs(&self) -> &[QuadNum] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> QuadNum {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &QuadNum) -> QuadNum {
        self.c.iter().rev().fold(QuadNum::zero(), |acc, a| &(&acc * x) + a)
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.c.iter().enumerate().skip(1).map(|(i, a)| a * &QuadNum::int(i as i64)).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().try_inv().expect("nonzero lead");
        UPoly::new(self.c.iter().map(|a| a * &inv).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.c.get(i).cloned().unwrap_or_default();
                    let b = o.c.get(i).cloned().unwrap_or_default();
                    a - b
                })
                .collect(),
        )
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::default();
        }
        let mut r = vec![QuadNum::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                r[i + j] = &r[i + j] + &(a * b);
            }
        }
        UPoly::new(r)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().try_inv().expect("nonzero lead");
        let mut r = self.c.clone();
        let mut q = vec![QuadNum::zero(); self.c.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let f = r[top].clone() * inv.clone();
            let shift = top - dd;
            for (j, b) in d.c.iter().enumerate() {
                r[shift + j] = r[shift + j].clone() - f.clone() * b.clone();
            }
            q[shift] = f;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (UPoly::new(q), UPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's algorithm: monic square-free factors with multiplicities.
    pub fn square_free(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.div_rem(&a).0;
        let mut c = fp.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Rational `B` with every real root in `(−B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lead = self.lead();
        let inv = lead.try_inv().expect("nonzero lead");
        let m = self.c[..self.c.len() - 1]
            .iter()
            .map(|a| (a * &inv).abs_upper_bound())
            .fold(Rational::zero(), |acc, x| if x > acc { x } else { acc });
        m + Rational::one()
    }

    fn sturm_chain(&self) -> Vec<UPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(UPoly::new(r.c.iter().map(|a| -a.clone()).collect()));
        }
        chain
    }

    fn sign_changes(chain: &[UPoly], x: &Rational) -> usize {
        let xq = QuadNum::rational(x.clone());
        let signs: Vec<i32> = chain.iter().map(|p| p.eval(&xq).signum()).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Disjoint intervals `(lo, hi]`, one per distinct real root, narrower
    /// than `width`.
    pub fn isolate_real_roots(&self, width: &Rational) -> Vec<(Rational, Rational)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let chain = self.sturm_chain();
        let b = self.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        let two = Rational::from_integer(BigInt::from(2));
        while let Some((lo, hi)) = stack.pop() {
            let n = Self::sign_changes(&chain, &lo) - Self::sign_changes(&chain, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 && &(&hi - &lo) < width {
                out.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / &two;
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        out.sort();
        out
    }
}

/// Simplest rational (smallest denominator) in the closed interval `[lo, hi]`.
pub fn simplest_rational(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi, "empty interval");
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_rational(&-hi.clone(), &-lo.clone());
    }
    let fl = lo.floor();
    if fl == *lo || fl.clone() + Rational::one() <= *hi {
        return if fl == *lo { fl } else { fl + Rational::one() };
    }
    // lo and hi share the integer part; recurse on reciprocals of the
    // fractional parts
    let a = fl;
    let inner = simplest_rational(&(hi - &a).recip(), &(lo - &a).recip());
    a + inner.recip()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Root {
    /// Exact value.
    Exact { value: QuadNum },
    /// Real root in `(lo, hi]`, not identified exactly.
    Interval { lo: String, hi: String, approx: f64 },
    /// Non-real root, numerical approximation.
    Complex { re: f64, im: f64 },
}

impl Root {
    pub fn as_exact(&self) -> Option<&QuadNum> {
        match self {
            Root::Exact { value } => Some(value),
            _ => None,
        }
    }

    pub fn approx(&self) -> (f64, f64) {
        match self {
            Root::Exact { value } => (value.to_f64(), 0.0),
            Root::Interval { approx, .. } => (*approx, 0.0),
            Root::Complex { re, im } => (*re, *im),
        }
    }
}

/// Roots of a factor of degree one or two that lie in ℚ(√2).
fn small_field_roots(f: &UPoly) -> Option<Vec<QuadNum>> {
    let c = f.monic().c;
    match c.len() {
        2 => Some(vec![-c[0].clone()]),
        3 => {
            // x² + b x + c0
            let half_b = c[1].clone() * QuadNum::frac(1, 2);
            let disc = half_b.clone() * half_b.clone() - c[0].clone();
            let s = QuadNum::sqrt_of_rational(disc.as_rational()?)?;
            let mut r = vec![-half_b.clone() - s.clone(), -half_b + s];
            r.sort();
            Some(r)
        }
        _ => None,
    }
}

/// All roots of `p` with multiplicity: real roots in increasing order,
/// then non-real ones, per square-free factor.
pub fn roots(p: &UPoly) -> Vec<Root> {
    let mut out = Vec::new();
    let width = Rational::new(BigInt::one(), BigInt::one() << 48);
    for (f, mult) in p.square_free() {
        let mut rest = f.clone();
        let mut found = Vec::new();
        let mut pending = Vec::new();
        for (lo, hi) in f.isolate_real_roots(&width) {
            let cq = QuadNum::rational(simplest_rational(&lo, &hi));
            if f.eval(&cq).is_zero() {
                rest = rest.div_rem(&UPoly::new(vec![-cq.clone(), QuadNum::one()])).0;
                found.push(Root::Exact { value: cq });
            } else {
                pending.push((lo, hi));
            }
        }
        let n_complex = f.degree().unwrap_or(0) - found.len() - pending.len();
        match small_field_roots(&rest).filter(|r| r.len() == pending.len()) {
            Some(exact) if !pending.is_empty() => found.extend(exact.into_iter().map(|value| Root::Exact { value })),
            _ => found.extend(pending.into_iter().map(|(lo, hi)| {
                let approx = crate::scalar::rat_to_f64(&((&lo + &hi) / Rational::from_integer(BigInt::from(2))));
                Root::Interval { lo: lo.to_string(), hi: hi.to_string(), approx }
            })),
        }
        if n_complex > 0 {
            let mut approx = durand_kerner(&rest);
            // the non-real roots are the ones farthest from the axis
            approx.sort_by(|a, b| b.1.abs().total_cmp(&a.1.abs()));
            let mut cs: Vec<(f64, f64)> = approx.into_iter().take(n_complex).collect();
            cs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
            found.extend(cs.into_iter().map(|(re, im)| Root::Complex { re, im }));
        }
        for r in found {
            for _ in 0..mult {
                out.push(r.clone());
            }
        }
    }
    out
}

/// Simultaneous Weierstrass iteration in double precision.
fn durand_kerner(p: &UPoly) -> Vec<(f64, f64)> {
    let Some(n) = p.degree() else { return Vec::new() };
    if n == 0 {
        return Vec::new();
    }
    let m = p.monic();
    let c: Vec<f64> = m.coeffs().iter().map(|a| a.to_f64()).collect();
    let eval = |z: (f64, f64)| {
        let mut acc = (0.0, 0.0);
        for a in c.iter().rev() {
            acc = (acc.0 * z.0 - acc.1 * z.1 + a, acc.0 * z.1 + acc.1 * z.0);
        }
        acc
    };
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let t = 0.4f64.powi(i as i32);
            let ang = 0.9 * i as f64;
            (t.cos() * ang.cos() + 0.1, ang.sin() * (1.0 + t))
        })
        .collect();
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let num = eval(z[i]);
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    let d = (z[i].0 - z[j].0, z[i].1 - z[j].1);
                    den = (den.0 * d.0 - den.1 * d.1, den.0 * d.1 + den.1 * d.0);
                }
            }
            let nn = den.0 * den.0 + den.1 * den.1;
            if nn == 0.0 {
                z[i].0 += 1e-6;
                continue;
            }
            let step = ((num.0 * den.0 + num.1 * den.1) / nn, (num.1 * den.0 - num.0 * den.1) / nn);
            z[i] = (z[i].0 - step.0, z[i].1 - step.1);
            delta = delta.max(step.0.abs() + step.1.abs());
        }
        if delta < 1e-14 {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn poly(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| QuadNum::int(x)).collect())
    }

    #[test]
    fn division_round_trip() {
        let a = poly(&[1, 2, 3, 4]);
        let b = poly(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).sub(&a.sub(&r)), UPoly::default());
        assert_eq!(r.degree(), Some(0));
    }

    #[test]
    fn yun_separates_multiplicities() {
        // (x − 1)^2 (x + 2)
        let f = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[2, 1]));
        let sf = f.square_free();
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (poly(&[2, 1]), 1));
        assert_eq!(sf[1], (poly(&[-1, 1]), 2));
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_rational(&ratio(1, 3), &ratio(1, 2)), ratio(1, 2));
        assert_eq!(simplest_rational(&ratio(3, 10), &ratio(4, 10)), ratio(1, 3));
        assert_eq!(simplest_rational(&ratio(-7, 3), &ratio(-2, 1)), ratio(-2, 1));
        assert_eq!(simplest_rational(&ratio(-1, 3), &ratio(5, 2)), ratio(0, 1));
    }

    #[test]
    fn mixed_roots() {
        // (x + 4)(2x − 3)(x² − 2)(x² + 1)
        let f = poly(&[4, 1]).mul(&poly(&[-3, 2])).mul(&poly(&[-2, 0, 1])).mul(&poly(&[1, 0, 1]));
        let r = roots(&f);
        assert_eq!(r.len(), 6);
        let exact: Vec<_> = r.iter().filter_map(|x| x.as_exact().cloned()).collect();
        assert!(exact.contains(&QuadNum::int(-4)) && exact.contains(&QuadNum::frac(3, 2)));
        let intervals = r.iter().filter(|x| matches!(x, Root::Interval { .. })).count();
        assert_eq!(intervals, 2);
        let complex: Vec<_> = r.iter().filter(|x| matches!(x, Root::Complex { .. })).map(|x| x.approx()).collect();
        assert_eq!(complex.len(), 2);
        for (re, im) in complex {
            assert!(re.abs() < 1e-9 && (im.abs() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn repeated_rational_roots() {
        let f = poly(&[0, 0, 1]).mul(&poly(&[-5, 1]));
        let r: Vec<_> = roots(&f).into_iter().map(|x| x.as_exact().cloned().unwrap()).collect();
        assert_eq!(r, vec![QuadNum::int(5), QuadNum::zero(), QuadNum::zero()]);
    }

    #[test]
    fn sqrt2_coefficients() {
        // x − √2 over ℚ(√2): the root is not rational
        let f = UPoly::new(vec![-QuadNum::sqrt2(), QuadNum::one()]);
        assert_eq!(roots(&f), vec![Root::Exact { value: QuadNum::sqrt2() }]);
        // x² − 3 has no root in the field
        let g = poly(&[-3, 0, 1]);
        let r = roots(&g);
        assert!(r.iter().all(|x| matches!(x, Root::Interval { .. })));
        let (v, _) = r[1].approx();
        assert!((v - 3f64.sqrt()).abs() < 1e-9);
    }
}
