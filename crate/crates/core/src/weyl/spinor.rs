use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::scalar::{Bindings, Coeff, QuadNum, Rational};

use super::scalar_op::{falling, ScalarDiffOp};

/// Polynomial in `x_1 … x_n` with coefficients in the parameter ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Coeff)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial arity");
            p.accumulate(m, c);
        }
        p
    }

    pub fn monomial(pows: Vec<u32>, c: Coeff) -> Self {
        let n = pows.len();
        Polynomial::from_terms(n, [(pows, c)])
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Polynomial::from_terms(nvars, [(vec![0; nvars], c)])
    }

    fn accumulate(&mut self, m: Vec<u32>, c: Coeff) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Coeff)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.accumulate(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.accumulate(m.clone(), -c);
        }
        r
    }

    pub fn scale(&self, s: &Coeff) -> Polynomial {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), c * s)))
    }

    pub fn substitute(&self, b: &Bindings) -> Polynomial {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), c.substitute(b))))
    }

    /// Action of a normal-ordered operator: differentiate, then multiply.
    pub fn apply(op: &ScalarDiffOp, p: &Polynomial) -> Polynomial {
        let mut r = Polynomial::zero(p.nvars);
        for (m, c) in op.terms() {
            for (pows, pc) in &p.terms {
                if pows.iter().zip(&m.dpow).any(|(&e, &d)| e < d) {
                    continue;
                }
                let mut w = num_bigint::BigInt::from(1);
                let mut out = Vec::with_capacity(pows.len());
                for i in 0..pows.len() {
                    w *= falling(pows[i], m.dpow[i]);
                    out.push(pows[i] - m.dpow[i] + m.xpow[i]);
                }
                let coef = (c * pc).scale(&QuadNum::rational(Rational::from_integer(w)));
                r.accumulate(out, coef);
            }
        }
        r
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Column of `dim` polynomials, the carrier space of a `dim × dim` operator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolySpinor {
    components: Vec<Polynomial>,
    nvars: usize,
}

impl PolySpinor {
    pub fn new(nvars: usize, components: Vec<Polynomial>) -> Self {
        assert!(!components.is_empty(), "spinor needs at least one component");
        assert!(components.iter().all(|c| c.nvars() == nvars), "component arity");
        PolySpinor { components, nvars }
    }

    pub fn zero(dim: usize, nvars: usize) -> Self {
        PolySpinor::new(nvars, vec![Polynomial::zero(nvars); dim])
    }

    /// Unit column with polynomial `p` in component `comp`.
    pub fn unit(dim: usize, comp: usize, p: Polynomial) -> Self {
        let nvars = p.nvars();
        let mut v = PolySpinor::zero(dim, nvars);
        v.components[comp] = p;
        v
    }

    /// `(1, 0, …)` style basis column with constant entry.
    pub fn basis(dim: usize, nvars: usize, comp: usize) -> Self {
        PolySpinor::unit(dim, comp, Polynomial::constant(nvars, Coeff::from(1)))
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> Option<u32> {
        self.components.iter().filter_map(|c| c.degree()).max()
    }

    pub fn add(&self, o: &PolySpinor) -> PolySpinor {
        PolySpinor::new(
            self.nvars,
            self.components.iter().zip(&o.components).map(|(a, b)| a.add(b)).collect(),
        )
    }

    pub fn sub(&self, o: &PolySpinor) -> PolySpinor {
        PolySpinor::new(
            self.nvars,
            self.components.iter().zip(&o.components).map(|(a, b)| a.sub(b)).collect(),
        )
    }

    pub fn scale(&self, s: &Coeff) -> PolySpinor {
        PolySpinor::new(self.nvars, self.components.iter().map(|c| c.scale(s)).collect())
    }

    pub fn substitute(&self, b: &Bindings) -> PolySpinor {
        PolySpinor::new(self.nvars, self.components.iter().map(|c| c.substitute(b)).collect())
    }

    /// Sparse coordinates keyed by `(component, exponents)`; every
    /// coefficient must be a plain number.
    pub fn coords(&self) -> Option<BTreeMap<(usize, Vec<u32>), QuadNum>> {
        let mut out = BTreeMap::new();
        for (i, c) in self.components.iter().enumerate() {
            for (m, v) in c.terms() {
                out.insert((i, m.clone()), v.as_constant()?);
            }
        }
        Some(out)
    }

    pub fn from_coords(dim: usize, nvars: usize, coords: &BTreeMap<(usize, Vec<u32>), QuadNum>) -> Self {
        let mut comps = vec![Polynomial::zero(nvars); dim];
        for ((i, m), v) in coords {
            if !v.is_zero() {
                comps[*i].accumulate(m.clone(), Coeff::constant(v.clone()));
            }
        }
        PolySpinor::new(nvars, comps)
    }
}

impl fmt::Display for PolySpinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join("; "))
    }
}
