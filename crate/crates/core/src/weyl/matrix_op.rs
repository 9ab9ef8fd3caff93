use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{check_dim, Result};
use crate::scalar::{Bindings, Coeff, Param, ParamMono, QuadNum};

use super::scalar_op::{DiffMonomial, ScalarDiffOp};

/// Coordinate key of an operator: `(row-major entry, monomial, parameter monomial)`.
pub type OpKey = (usize, DiffMonomial, ParamMono);
use super::spinor::{PolySpinor, Polynomial};

/// `dim × dim` array of scalar differential operators in `nvars` variables.
///
/// Products follow the usual matrix convention with operator composition in
/// each entry: `(A∘B)_ij = Σ_l A_il ∘ B_lj`, so `B` acts first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MatrixDiffOp {
    dim: usize,
    nvars: usize,
    entries: Vec<ScalarDiffOp>,
}

impl MatrixDiffOp {
    pub fn zero(dim: usize, nvars: usize) -> Self {
        assert!(dim >= 1 && nvars >= 1, "dim and nvars must be positive");
        MatrixDiffOp { dim, nvars, entries: vec![ScalarDiffOp::zero(nvars); dim * dim] }
    }

    pub fn from_entries(dim: usize, nvars: usize, entries: Vec<ScalarDiffOp>) -> Result<Self> {
        check_dim("entry count", entries.len(), dim * dim)?;
        for e in &entries {
            check_dim("nvars", e.nvars(), nvars)?;
        }
        Ok(MatrixDiffOp { dim, nvars, entries })
    }

    /// `op ⊗ 1_dim`.
    pub fn scalar(dim: usize, op: &ScalarDiffOp) -> Self {
        let mut r = MatrixDiffOp::zero(dim, op.nvars());
        for i in 0..dim {
            r.entries[i * dim + i] = op.clone();
        }
        r
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        MatrixDiffOp::scalar(dim, &ScalarDiffOp::one(nvars))
    }

    pub fn constant(dim: usize, nvars: usize, c: Coeff) -> Self {
        MatrixDiffOp::scalar(dim, &ScalarDiffOp::constant(nvars, c))
    }

    /// Constant matrix, row-major.
    pub fn from_matrix(nvars: usize, dim: usize, m: &[Coeff]) -> Self {
        assert_eq!(m.len(), dim * dim, "matrix size");
        let entries = m.iter().map(|c| ScalarDiffOp::constant(nvars, c.clone())).collect();
        MatrixDiffOp { dim, nvars, entries }
    }

    pub fn x(dim: usize, nvars: usize, i: usize) -> Self {
        MatrixDiffOp::scalar(dim, &ScalarDiffOp::x(nvars, i))
    }

    pub fn d(dim: usize, nvars: usize, i: usize) -> Self {
        MatrixDiffOp::scalar(dim, &ScalarDiffOp::d(nvars, i))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &ScalarDiffOp {
        &self.entries[i * self.dim + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, op: ScalarDiffOp) {
        assert_eq!(op.nvars(), self.nvars, "nvars");
        self.entries[i * self.dim + j] = op;
    }

    pub fn entries(&self) -> &[ScalarDiffOp] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn term_count(&self) -> usize {
        self.entries.iter().map(|e| e.len()).sum()
    }

    fn same_shape(&self, o: &MatrixDiffOp) -> Result<()> {
        check_dim("matrix dimension", self.dim, o.dim)?;
        check_dim("nvars", self.nvars, o.nvars)
    }

    pub fn try_add(&self, o: &MatrixDiffOp) -> Result<MatrixDiffOp> {
        self.same_shape(o)?;
        Ok(self.zip(o, |a, b| a.add(b)))
    }

    pub fn try_sub(&self, o: &MatrixDiffOp) -> Result<MatrixDiffOp> {
        self.same_shape(o)?;
        Ok(self.zip(o, |a, b| a.sub(b)))
    }

    fn zip(&self, o: &MatrixDiffOp, f: impl Fn(&ScalarDiffOp, &ScalarDiffOp) -> ScalarDiffOp) -> MatrixDiffOp {
        MatrixDiffOp {
            dim: self.dim,
            nvars: self.nvars,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn scale(&self, s: &Coeff) -> MatrixDiffOp {
        MatrixDiffOp {
            dim: self.dim,
            nvars: self.nvars,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    /// Exact composition `self ∘ o`.
    pub fn compose(&self, o: &MatrixDiffOp) -> Result<MatrixDiffOp> {
        self.same_shape(o)?;
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = ScalarDiffOp::zero(self.nvars);
                for l in 0..d {
                    let a = &self.entries[i * d + l];
                    let b = &o.entries[l * d + j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.compose(b));
                }
                entries.push(acc);
            }
        }
        Ok(MatrixDiffOp { dim: d, nvars: self.nvars, entries })
    }

    /// `[self, o] = self∘o − o∘self`.
    pub fn commutator(&self, o: &MatrixDiffOp) -> Result<MatrixDiffOp> {
        let ab = self.compose(o)?;
        let ba = o.compose(self)?;
        ab.try_sub(&ba)
    }

    pub fn pow(&self, e: u32) -> MatrixDiffOp {
        let mut r = MatrixDiffOp::identity(self.dim, self.nvars);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn apply(&self, v: &PolySpinor) -> Result<PolySpinor> {
        check_dim("spinor dimension", v.dim(), self.dim)?;
        check_dim("nvars", v.nvars(), self.nvars)?;
        let d = self.dim;
        let mut comps = Vec::with_capacity(d);
        for i in 0..d {
            let mut acc = Polynomial::zero(self.nvars);
            for j in 0..d {
                let e = &self.entries[i * d + j];
                if !e.is_zero() {
                    acc = acc.add(&Polynomial::apply(e, v.component(j)));
                }
            }
            comps.push(acc);
        }
        Ok(PolySpinor::new(self.nvars, comps))
    }

    pub fn substitute(&self, bindings: &Bindings) -> MatrixDiffOp {
        if bindings.is_empty() {
            return self.clone();
        }
        MatrixDiffOp {
            dim: self.dim,
            nvars: self.nvars,
            entries: self.entries.iter().map(|e| e.substitute(bindings)).collect(),
        }
    }

    pub fn params(&self) -> Vec<Param> {
        let mut ps: Vec<Param> = self.entries.iter().flat_map(|e| e.params()).collect();
        ps.sort();
        ps.dedup();
        ps
    }

    pub fn renormalized(&self) -> MatrixDiffOp {
        MatrixDiffOp {
            dim: self.dim,
            nvars: self.nvars,
            entries: self.entries.iter().map(|e| e.renormalized()).collect(),
        }
    }

    /// Common `(x_1 … x_n)` degree shift of all non-zero entries.
    pub fn grade(&self) -> Option<Vec<i64>> {
        let mut g = None;
        for e in self.entries.iter().filter(|e| !e.is_zero()) {
            let eg = e.grade()?;
            match &g {
                None => g = Some(eg),
                Some(prev) if *prev != eg => return None,
                _ => {}
            }
        }
        g
    }

    /// Terms of the entries that carry no `x` or `∂`: the pure matrix part.
    pub fn constant_part(&self) -> Vec<Coeff> {
        self.entries
            .iter()
            .map(|e| {
                e.terms()
                    .find(|(m, _)| m.xpow.iter().chain(&m.dpow).all(|&p| p == 0))
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(Coeff::zero)
            })
            .collect()
    }

    /// `Some(c)` when the operator equals `c · 1`.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<Coeff> {
        let c = self.constant_part()[0].clone();
        (*self == MatrixDiffOp::constant(self.dim, self.nvars, c.clone())).then_some(c)
    }
}

impl Add for &MatrixDiffOp {
    type Output = MatrixDiffOp;
    fn add(self, o: &MatrixDiffOp) -> MatrixDiffOp {
        self.try_add(o).expect("operator shape mismatch in +")
    }
}

impl Sub for &MatrixDiffOp {
    type Output = MatrixDiffOp;
    fn sub(self, o: &MatrixDiffOp) -> MatrixDiffOp {
        self.try_sub(o).expect("operator shape mismatch in -")
    }
}

impl Mul for &MatrixDiffOp {
    type Output = MatrixDiffOp;
    fn mul(self, o: &MatrixDiffOp) -> MatrixDiffOp {
        self.compose(o).expect("operator shape mismatch in *")
    }
}

impl Mul<&MatrixDiffOp> for &Coeff {
    type Output = MatrixDiffOp;
    fn mul(self, o: &MatrixDiffOp) -> MatrixDiffOp {
        o.scale(self)
    }
}

impl Neg for &MatrixDiffOp {
    type Output = MatrixDiffOp;
    fn neg(self) -> MatrixDiffOp {
        MatrixDiffOp {
            dim: self.dim,
            nvars: self.nvars,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }
}

impl Add for MatrixDiffOp {
    type Output = MatrixDiffOp;
    fn add(self, o: MatrixDiffOp) -> MatrixDiffOp {
        &self + &o
    }
}

impl Sub for MatrixDiffOp {
    type Output = MatrixDiffOp;
    fn sub(self, o: MatrixDiffOp) -> MatrixDiffOp {
        &self - &o
    }
}

impl Mul for MatrixDiffOp {
    type Output = MatrixDiffOp;
    fn mul(self, o: MatrixDiffOp) -> MatrixDiffOp {
        &self * &o
    }
}

impl Neg for MatrixDiffOp {
    type Output = MatrixDiffOp;
    fn neg(self) -> MatrixDiffOp {
        -&self
    }
}

impl fmt::Display for MatrixDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim == 1 {
            return write!(f, "{}", self.entries[0]);
        }
        let rows: Vec<String> = (0..self.dim)
            .map(|i| {
                let r: Vec<String> = (0..self.dim).map(|j| self.entry(i, j).to_string()).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(",\n "))
    }
}

impl MatrixDiffOp {
    /// Exact coefficient vector keyed by `(entry, monomial, parameter
    /// monomial)`; spans of operators are computed from these.
    pub fn coordinates(&self) -> BTreeMap<OpKey, QuadNum> {
        let mut out = BTreeMap::new();
        for (idx, e) in self.entries.iter().enumerate() {
            for (m, c) in e.terms() {
                for (pm, v) in c.terms() {
                    out.insert((idx, m.clone(), *pm), v.clone());
                }
            }
        }
        out
    }

    /// Identity of the same shape.
    pub fn one_like(&self) -> MatrixDiffOp {
        MatrixDiffOp::identity(self.dim, self.nvars)
    }

    pub fn zero_like(&self) -> MatrixDiffOp {
        MatrixDiffOp::zero(self.dim, self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalar::Coeff;
    use num_traits::One;

    #[test]
    fn flat_commutator_of_vector_fields() {
        let x = |i| MatrixDiffOp::x(1, 2, i);
        let d = |i| MatrixDiffOp::d(1, 2, i);
        let e12 = &x(0) * &d(1);
        let e21 = &x(1) * &d(0);
        let got = e12.commutator(&e21).unwrap();
        let want = &(&x(0) * &d(0)) - &(&x(1) * &d(1));
        assert_eq!(got, want);
        assert!(d(0).commutator(&d(1)).unwrap().is_zero());
    }

    #[test]
    fn mismatch_names_both_dims() {
        let a = MatrixDiffOp::identity(2, 2);
        let b = MatrixDiffOp::identity(3, 2);
        match a.compose(&b) {
            Err(Error::DimensionMismatch { left, right, .. }) => assert_eq!((left, right), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn square_of_e12_has_no_lower_terms() {
        let e12 = &MatrixDiffOp::x(1, 2, 0) * &MatrixDiffOp::d(1, 2, 1);
        let sq = &e12 * &e12;
        let want = MatrixDiffOp::scalar(1, &ScalarDiffOp::monomial(vec![2, 0], vec![0, 2], Coeff::one()));
        assert_eq!(sq, want);
    }

    #[test]
    fn zero_operator_kills_everything() {
        let z = MatrixDiffOp::zero(2, 2);
        let v = PolySpinor::new(
            2,
            vec![
                Polynomial::monomial(vec![1, 2], Coeff::k()),
                Polynomial::constant(2, Coeff::sqrt2()),
            ],
        );
        assert!(z.apply(&v).unwrap().is_zero());
    }
}
