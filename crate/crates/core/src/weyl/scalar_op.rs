use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{Bindings, Coeff, Param, QuadNum, Rational};

/// Normal-ordered monomial `x^xpow ∂^dpow`: every `x` stands left of every `∂`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DiffMonomial {
    pub xpow: Vec<u32>,
    pub dpow: Vec<u32>,
}

impl DiffMonomial {
    pub fn one(nvars: usize) -> Self {
        DiffMonomial { xpow: vec![0; nvars], dpow: vec![0; nvars] }
    }

    pub fn nvars(&self) -> usize {
        self.xpow.len()
    }

    /// Net change of polynomial degree per variable.
    pub fn grade(&self) -> Vec<i64> {
        self.xpow
            .iter()
            .zip(&self.dpow)
            .map(|(&x, &d)| x as i64 - d as i64)
            .collect()
    }

    pub fn order(&self) -> u32 {
        self.dpow.iter().sum()
    }

    /// `self ∘ other`, normal ordered by the Leibniz rule
    /// `∂^b x^c = Σ_j C(b,j) c!/(c-j)! x^(c-j) ∂^(b-j)` per variable.
    pub fn compose(&self, other: &DiffMonomial) -> Vec<(DiffMonomial, BigInt)> {
        let n = self.nvars();
        // per variable: list of (j, weight)
        let mut options: Vec<Vec<(u32, BigInt)>> = Vec::with_capacity(n);
        for i in 0..n {
            let b = self.dpow[i];
            let c = other.xpow[i];
            let mut v = Vec::new();
            for j in 0..=b.min(c) {
                v.push((j, binomial(b, j) * falling(c, j)));
            }
            options.push(v);
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            let mut w = BigInt::one();
            let mut xpow = Vec::with_capacity(n);
            let mut dpow = Vec::with_capacity(n);
            for i in 0..n {
                let (j, ref wi) = options[i][idx[i]];
                w *= wi;
                xpow.push(self.xpow[i] + other.xpow[i] - j);
                dpow.push(self.dpow[i] - j + other.dpow[i]);
            }
            out.push((DiffMonomial { xpow, dpow }, w));
            // advance the mixed-radix counter
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                idx[i] += 1;
                if idx[i] < options[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

pub(crate) fn falling(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

/// Finite sum of normal-ordered terms `c · x^A ∂^B`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ScalarDiffOp {
    nvars: usize,
    terms: BTreeMap<DiffMonomial, Coeff>,
}

impl ScalarDiffOp {
    pub fn zero(nvars: usize) -> Self {
        ScalarDiffOp { nvars, terms: BTreeMap::new() }
    }

    /// Sums duplicate monomials and drops zero coefficients.
    ///
    /// Panics if a monomial has the wrong variable count.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (DiffMonomial, Coeff)>) -> Self {
        let mut op = ScalarDiffOp::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            op.accumulate(m, c);
        }
        op
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        ScalarDiffOp::from_terms(nvars, [(DiffMonomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        ScalarDiffOp::constant(nvars, Coeff::one())
    }

    /// The multiplication operator `x_i` (0-based index).
    pub fn x(nvars: usize, i: usize) -> Self {
        let mut m = DiffMonomial::one(nvars);
        m.xpow[i] = 1;
        ScalarDiffOp::from_terms(nvars, [(m, Coeff::one())])
    }

    /// The derivation `∂_i` (0-based index).
    pub fn d(nvars: usize, i: usize) -> Self {
        let mut m = DiffMonomial::one(nvars);
        m.dpow[i] = 1;
        ScalarDiffOp::from_terms(nvars, [(m, Coeff::one())])
    }

    pub fn monomial(xpow: Vec<u32>, dpow: Vec<u32>, c: Coeff) -> Self {
        let nvars = xpow.len();
        ScalarDiffOp::from_terms(nvars, [(DiffMonomial { xpow, dpow }, c)])
    }

    fn accumulate(&mut self, m: DiffMonomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DiffMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &ScalarDiffOp) -> ScalarDiffOp {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.accumulate(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &ScalarDiffOp) -> ScalarDiffOp {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.accumulate(m.clone(), -c);
        }
        r
    }

    pub fn neg(&self) -> ScalarDiffOp {
        ScalarDiffOp {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Coeff) -> ScalarDiffOp {
        if s.is_zero() {
            return ScalarDiffOp::zero(self.nvars);
        }
        ScalarDiffOp::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), c * s)))
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &ScalarDiffOp) -> ScalarDiffOp {
        let mut r = ScalarDiffOp::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                for (m, w) in ma.compose(mb) {
                    r.accumulate(m, c.scale(&QuadNum::rational(Rational::from_integer(w))));
                }
            }
        }
        r
    }

    pub fn substitute(&self, bindings: &Bindings) -> ScalarDiffOp {
        ScalarDiffOp::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.clone(), c.substitute(bindings))),
        )
    }

    pub fn params(&self) -> Vec<Param> {
        let mut ps: Vec<Param> = self.terms.values().flat_map(|c| c.params()).collect();
        ps.sort();
        ps.dedup();
        ps
    }

    /// Common grade of all terms, `None` for inhomogeneous operators.
    /// The zero operator has no grade.
    pub fn grade(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys().map(|m| m.grade());
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    /// Rebuilds the canonical map from its own terms.
    pub fn renormalized(&self) -> ScalarDiffOp {
        ScalarDiffOp::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    pub fn max_order(&self) -> u32 {
        self.terms.keys().map(|m| m.order()).max().unwrap_or(0)
    }
}

fn fmt_diff_monomial(m: &DiffMonomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.xpow.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    for (i, &e) in m.dpow.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("d{}", i + 1)),
            _ => parts.push(format!("d{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for ScalarDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono = fmt_diff_monomial(m);
                if mono.is_empty() {
                    format!("({c})")
                } else if *c == Coeff::one() {
                    mono
                } else {
                    format!("({c})*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
