//! Generator factories: `gl_n` matrix blocks, the mixed `gl(n+1)` generators
//! `E_ij = x_i∂_j + M_ij`, `T_i^- = ∂_i`, `E_0`, `T_i^+`, and the `g(m)`
//! generators on the plane.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{compare_spans, solve_columns, SpanComparison};
use crate::scalar::{Coeff, Param, ParamMono, QuadNum};
use crate::weyl::{MatrixDiffOp, ScalarDiffOp};

/// Constant `dim × dim` matrix over the coefficient ring, row-major.
pub type ConstMatrix = Vec<Coeff>;

fn mat_mul(dim: usize, a: &[Coeff], b: &[Coeff]) -> ConstMatrix {
    let mut r = vec![Coeff::zero(); dim * dim];
    for i in 0..dim {
        for l in 0..dim {
            let x = &a[i * dim + l];
            if x.is_zero() {
                continue;
            }
            for j in 0..dim {
                r[i * dim + j] = &r[i * dim + j] + &(x * &b[l * dim + j]);
            }
        }
    }
    r
}

fn mat_comb(a: &[Coeff], b: &[Coeff], sign: i64) -> ConstMatrix {
    let s = Coeff::int(sign);
    a.iter().zip(b).map(|(x, y)| x + &(&s * y)).collect()
}

/// A family `M_ij` (`i, j = 1..n`) of `dim × dim` matrices meant to satisfy
/// `[M_ij, M_kl] = δ_jk M_il − δ_il M_kj`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GlMatrixRep {
    n: usize,
    dim: usize,
    blocks: Vec<ConstMatrix>,
}

impl GlMatrixRep {
    /// Validates the canonical relations.
    pub fn new(n: usize, dim: usize, blocks: Vec<ConstMatrix>) -> Result<Self> {
        let rep = GlMatrixRep::new_unchecked(n, dim, blocks)?;
        let report = check_canonical(&rep);
        match report.failure {
            None => Ok(rep),
            Some(f) => Err(Error::Invalid(format!("matrix block violates canonical relations at {f}"))),
        }
    }

    /// Shape checks only; used for deliberately corrupted blocks.
    pub fn new_unchecked(n: usize, dim: usize, blocks: Vec<ConstMatrix>) -> Result<Self> {
        if n == 0 || dim == 0 {
            return Err(Error::Invalid("n and dim must be positive".into()));
        }
        check_dim("block count", blocks.len(), n * n)?;
        for b in &blocks {
            check_dim("block size", b.len(), dim * dim)?;
        }
        Ok(GlMatrixRep { n, dim, blocks })
    }

    /// All `M_ij = 0` in dimension one.
    pub fn trivial(n: usize) -> Self {
        GlMatrixRep { n, dim: 1, blocks: vec![vec![Coeff::zero()]; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `M_ij`, 1-based indices.
    pub fn block(&self, i: usize, j: usize) -> &ConstMatrix {
        &self.blocks[(i - 1) * self.n + (j - 1)]
    }

    /// Copy with one matrix entry replaced (1-based block indices, 0-based
    /// row/column); the result is not validated.
    pub fn with_entry(&self, i: usize, j: usize, row: usize, col: usize, value: Coeff) -> GlMatrixRep {
        let mut r = self.clone();
        r.blocks[(i - 1) * self.n + (j - 1)][row * self.dim + col] = value;
        r
    }

    /// `C_1(M) = Σ M_ii`.
    pub fn first_casimir(&self) -> ConstMatrix {
        (1..=self.n).fold(vec![Coeff::zero(); self.dim * self.dim], |acc, i| mat_comb(&acc, self.block(i, i), 1))
    }

    /// `C_2(M) = Σ M_ij M_ji`.
    pub fn second_casimir(&self) -> ConstMatrix {
        let mut acc = vec![Coeff::zero(); self.dim * self.dim];
        for i in 1..=self.n {
            for j in 1..=self.n {
                acc = mat_comb(&acc, &mat_mul(self.dim, self.block(i, j), self.block(j, i)), 1);
            }
        }
        acc
    }

    /// `M_ij` as a constant operator in `nvars` variables.
    pub fn op(&self, i: usize, j: usize, nvars: usize) -> MatrixDiffOp {
        MatrixDiffOp::from_matrix(nvars, self.dim, self.block(i, j))
    }

    /// The diagonal of `M_ii` when it is a diagonal matrix with plain
    /// integer entries; used to grade spinor components.
    pub fn diagonal_weights(&self, i: usize) -> Option<Vec<i64>> {
        let b = self.block(i, i);
        let mut w = Vec::with_capacity(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                if r != c && !b[r * self.dim + c].is_zero() {
                    return None;
                }
            }
            let v = b[r * self.dim + r].as_constant()?;
            let q = v.as_rational()?;
            if !q.is_integer() {
                return None;
            }
            w.push(i64::try_from(q.to_integer()).ok()?);
        }
        Some(w)
    }
}

/// Square root of a non-negative integer inside ℚ(√2), if any.
fn root_in_field(c: i64) -> Option<Coeff> {
    QuadNum::sqrt_of_rational(&crate::scalar::rat(c)).map(Coeff::constant)
}

/// The `d`-dimensional irreducible `gl_2` block with `M11 = diag(d−1, …, 0)`
/// and `M22 = diag(0, …, d−1)`.
///
/// `[M12, M21] = M11 − M22` only fixes the products `c_i = (i+1)(d−1−i)` of
/// the super- and subdiagonal entries. Entries are `√c_i` on both sides when
/// that number lies in ℚ(√2) (this reproduces the reference `d = 2, 3`
/// matrices) and `(1, c_i)` otherwise.
pub fn gl2_irrep(d: usize) -> Result<GlMatrixRep> {
    if d == 0 {
        return Err(Error::Invalid("irrep dimension must be at least 1".into()));
    }
    let z = || vec![Coeff::zero(); d * d];
    let (mut m11, mut m22, mut m12, mut m21) = (z(), z(), z(), z());
    for i in 0..d {
        m11[i * d + i] = Coeff::int((d - 1 - i) as i64);
        m22[i * d + i] = Coeff::int(i as i64);
    }
    for i in 0..d.saturating_sub(1) {
        let c = ((i + 1) * (d - 1 - i)) as i64;
        let (up, down) = match root_in_field(c) {
            Some(s) => (s.clone(), s),
            None => (Coeff::one(), Coeff::int(c)),
        };
        m12[i * d + i + 1] = up;
        m21[(i + 1) * d + i] = down;
    }
    GlMatrixRep::new(2, d, vec![m11, m12, m21, m22])
}

/// First violated canonical relation `[M_ij, M_kl] = δ_jk M_il − δ_il M_kj`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFailure {
    pub indices: [usize; 4],
    pub expected: ConstMatrix,
    pub got: ConstMatrix,
}

impl fmt::Display for CanonicalFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k, l] = self.indices;
        write!(f, "[M{i}{j}, M{k}{l}]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalReport {
    pub checked: usize,
    pub failure: Option<CanonicalFailure>,
}

impl CanonicalReport {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn check_canonical(rep: &GlMatrixRep) -> CanonicalReport {
    let n = rep.n;
    let dim = rep.dim;
    let zero = vec![Coeff::zero(); dim * dim];
    let mut checked = 0;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    checked += 1;
                    let a = rep.block(i, j);
                    let b = rep.block(k, l);
                    let got = mat_comb(&mat_mul(dim, a, b), &mat_mul(dim, b, a), -1);
                    let mut expected = zero.clone();
                    if j == k {
                        expected = mat_comb(&expected, rep.block(i, l), 1);
                    }
                    if i == l {
                        expected = mat_comb(&expected, rep.block(k, j), -1);
                    }
                    if got != expected {
                        return CanonicalReport {
                            checked,
                            failure: Some(CanonicalFailure { indices: [i, j, k, l], expected, got }),
                        };
                    }
                }
            }
        }
    }
    CanonicalReport { checked, failure: None }
}

/// Recipe naming a mixed representation: variable count, Euler–Cartan
/// parameter `k` and the `gl_n` matrix block.
#[derive(Clone, Debug, PartialEq)]
pub struct RepSpec {
    pub n: usize,
    pub k: Coeff,
    pub rep: GlMatrixRep,
}

impl RepSpec {
    pub fn new(n: usize, k: Coeff, rep: GlMatrixRep) -> Result<Self> {
        check_dim("gl_n rank", rep.n(), n)?;
        Ok(RepSpec { n, k, rep })
    }

    /// `n = 2`, symbolic `k`, `d`-dimensional `gl_2` block: the `[k, d−1]`
    /// representation.
    pub fn gl3(d: usize) -> Result<Self> {
        RepSpec::new(2, Coeff::k(), gl2_irrep(d)?)
    }

    pub fn with_k(mut self, k: Coeff) -> Self {
        self.k = k;
        self
    }
}

/// Names of the `gl(n+1)` generators; indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum GenName {
    E(usize, usize),
    E0,
    TMinus(usize),
    TPlus(usize),
}

impl GenName {
    /// Position `(a, b)` of the standard basis element `e_ab` of `gl(n+1)`
    /// (indices `0..=n`) realized by this generator.
    pub fn gl_index(self) -> (usize, usize) {
        match self {
            GenName::E0 => (0, 0),
            GenName::TMinus(i) => (0, i),
            GenName::TPlus(i) => (i, 0),
            GenName::E(i, j) => (i, j),
        }
    }

    pub fn from_gl_index(a: usize, b: usize) -> GenName {
        match (a, b) {
            (0, 0) => GenName::E0,
            (0, i) => GenName::TMinus(i),
            (i, 0) => GenName::TPlus(i),
            (i, j) => GenName::E(i, j),
        }
    }
}

impl fmt::Display for GenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenName::E(i, j) => write!(f, "E{i}{j}"),
            GenName::E0 => write!(f, "E0"),
            GenName::TMinus(i) => write!(f, "T{i}-"),
            GenName::TPlus(i) => write!(f, "T{i}+"),
        }
    }
}

/// The mixed generators of one representation, all of the same shape.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    spec: RepSpec,
    gens: BTreeMap<GenName, MatrixDiffOp>,
}

impl GeneratorSet {
    pub fn spec(&self) -> &RepSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn dim(&self) -> usize {
        self.spec.rep.dim()
    }

    pub fn get(&self, name: GenName) -> &MatrixDiffOp {
        &self.gens[&name]
    }

    pub fn e(&self, i: usize, j: usize) -> &MatrixDiffOp {
        self.get(GenName::E(i, j))
    }

    pub fn e0(&self) -> &MatrixDiffOp {
        self.get(GenName::E0)
    }

    pub fn tm(&self, i: usize) -> &MatrixDiffOp {
        self.get(GenName::TMinus(i))
    }

    pub fn tp(&self, i: usize) -> &MatrixDiffOp {
        self.get(GenName::TPlus(i))
    }

    /// Generator realizing `e_ab`.
    pub fn basis(&self, a: usize, b: usize) -> &MatrixDiffOp {
        self.get(GenName::from_gl_index(a, b))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GenName, &MatrixDiffOp)> {
        self.gens.iter()
    }

    pub fn ops(&self) -> Vec<MatrixDiffOp> {
        self.gens.values().cloned().collect()
    }

    /// `M_ij` as a constant operator of the same shape.
    pub fn m(&self, i: usize, j: usize) -> MatrixDiffOp {
        self.spec.rep.op(i, j, self.n())
    }

    pub fn x(&self, i: usize) -> MatrixDiffOp {
        MatrixDiffOp::x(self.dim(), self.n(), i - 1)
    }

    pub fn d(&self, i: usize) -> MatrixDiffOp {
        MatrixDiffOp::d(self.dim(), self.n(), i - 1)
    }

    pub fn scalar(&self, c: Coeff) -> MatrixDiffOp {
        MatrixDiffOp::constant(self.dim(), self.n(), c)
    }

    pub fn identity(&self) -> MatrixDiffOp {
        MatrixDiffOp::identity(self.dim(), self.n())
    }

    /// All generators with `bindings` substituted.
    pub fn substitute(&self, bindings: &crate::scalar::Bindings) -> GeneratorSet {
        GeneratorSet {
            spec: RepSpec { n: self.spec.n, k: self.spec.k.substitute(bindings), rep: self.spec.rep.clone() },
            gens: self.gens.iter().map(|(k, v)| (*k, v.substitute(bindings))).collect(),
        }
    }

    /// Replace one generator; used for negative controls.
    pub fn with_generator(&self, name: GenName, op: MatrixDiffOp) -> GeneratorSet {
        let mut g = self.clone();
        g.gens.insert(name, op);
        g
    }
}

/// `E_ij = x_i∂_j + M_ij`, `T_i^- = ∂_i`, `E_0 = k − Σ x_j∂_j`,
/// `T_i^+ = x_i E_0 − Σ_j x_j M_ij`.
pub fn build_gl_np1(spec: &RepSpec) -> GeneratorSet {
    let n = spec.n;
    let dim = spec.rep.dim();
    let x = |i: usize| MatrixDiffOp::x(dim, n, i - 1);
    let d = |i: usize| MatrixDiffOp::d(dim, n, i - 1);
    let mut gens = BTreeMap::new();
    let mut euler = MatrixDiffOp::zero(dim, n);
    for j in 1..=n {
        euler = &euler + &(&x(j) * &d(j));
    }
    let e0 = &MatrixDiffOp::constant(dim, n, spec.k.clone()) - &euler;
    for i in 1..=n {
        for j in 1..=n {
            gens.insert(GenName::E(i, j), &(&x(i) * &d(j)) + &spec.rep.op(i, j, n));
        }
        gens.insert(GenName::TMinus(i), d(i));
        let mut tp = &x(i) * &e0;
        for j in 1..=n {
            tp = &tp - &(&x(j) * &spec.rep.op(i, j, n));
        }
        gens.insert(GenName::TPlus(i), tp);
    }
    gens.insert(GenName::E0, e0);
    GeneratorSet { spec: spec.clone(), gens }
}

/// Names of the `g(m)` generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum GmName {
    J12,
    J11,
    J22,
    J21,
    J0,
    TMinus(usize),
    U(usize),
}

impl fmt::Display for GmName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GmName::J12 => write!(f, "J12"),
            GmName::J11 => write!(f, "J11"),
            GmName::J22 => write!(f, "J22"),
            GmName::J21 => write!(f, "J21"),
            GmName::J0 => write!(f, "J0"),
            GmName::TMinus(i) => write!(f, "T{i}-"),
            GmName::U(i) => write!(f, "U{i}"),
        }
    }
}

pub const GM_CARTAN: [GmName; 5] = [GmName::J12, GmName::J11, GmName::J22, GmName::J21, GmName::J0];

/// Generators of `g(m)` acting on functions of `(x, y)`.
#[derive(Clone, Debug)]
pub struct GmGeneratorSet {
    m: usize,
    k: Coeff,
    rep: GlMatrixRep,
    gens: BTreeMap<GmName, MatrixDiffOp>,
}

impl GmGeneratorSet {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> &Coeff {
        &self.k
    }

    pub fn rep(&self) -> &GlMatrixRep {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn get(&self, name: GmName) -> &MatrixDiffOp {
        &self.gens[&name]
    }

    pub fn lowering(&self) -> Vec<&MatrixDiffOp> {
        (0..=self.m).map(|i| self.get(GmName::TMinus(i))).collect()
    }

    pub fn raising(&self) -> Vec<&MatrixDiffOp> {
        (0..=self.m).map(|i| self.get(GmName::U(i))).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GmName, &MatrixDiffOp)> {
        self.gens.iter()
    }

    pub fn ops(&self) -> Vec<MatrixDiffOp> {
        self.gens.values().cloned().collect()
    }

    /// `[J21, U_m]`, the first commutator past the tower.
    pub fn next_raising(&self) -> MatrixDiffOp {
        self.get(GmName::J21).commutator(self.get(GmName::U(self.m))).expect("same shape")
    }

    /// Factor `(−1)^i m!/(m−i)!` relating the commutator tower to
    /// [`raising_closed_form`](Self::raising_closed_form).
    pub fn raising_normalization(&self, i: usize) -> Coeff {
        let f = (0..i).fold(1i64, |acc, l| -acc * (self.m - l) as i64);
        Coeff::int(f)
    }

    /// `y ∂_x^(m−i) J0 (J0 + 1) … (J0 + i − 1)`.
    pub fn raising_closed_form(&self, i: usize) -> MatrixDiffOp {
        assert!(i <= self.m, "tower index");
        let dim = self.dim();
        let y = MatrixDiffOp::x(dim, 2, 1);
        let dx = MatrixDiffOp::d(dim, 2, 0);
        let j0 = self.get(GmName::J0);
        let mut r = &y * &dx.pow((self.m - i) as u32);
        for l in 0..i {
            r = &r * &(j0 + &MatrixDiffOp::constant(dim, 2, Coeff::int(l as i64)));
        }
        r
    }
}

/// `J12 = ∂_x + M12`, `J11 = −x∂_x + k/3 + M11`, `J22 = −x∂_x + m y∂_y + M22`,
/// `J21 = x²∂_x + m x y∂_y − k x + M21`, `J0 = x∂_x + m y∂_y − k`,
/// `T_i^- = x^i ∂_y`, `U_0 = y ∂_x^m` and `U_i = [J21, U_(i−1)]`.
pub fn build_gm(m: usize, k: Coeff, rep: &GlMatrixRep) -> Result<GmGeneratorSet> {
    if m == 0 {
        return Err(Error::Invalid("g(m) needs m >= 1".into()));
    }
    check_dim("gl_n rank", rep.n(), 2)?;
    let dim = rep.dim();
    let s = |xp: u32, yp: u32, dx: u32, dy: u32, c: Coeff| {
        MatrixDiffOp::scalar(dim, &ScalarDiffOp::monomial(vec![xp, yp], vec![dx, dy], c))
    };
    let mc = Coeff::int(m as i64);
    let kc = || MatrixDiffOp::constant(dim, 2, k.clone());
    let mut gens = BTreeMap::new();
    gens.insert(GmName::J12, &s(0, 0, 1, 0, Coeff::one()) + &rep.op(1, 2, 2));
    gens.insert(
        GmName::J11,
        &(&s(1, 0, 1, 0, Coeff::int(-1)) + &MatrixDiffOp::constant(dim, 2, &k * &Coeff::frac(1, 3))) + &rep.op(1, 1, 2),
    );
    gens.insert(
        GmName::J22,
        &(&s(1, 0, 1, 0, Coeff::int(-1)) + &s(0, 1, 0, 1, mc.clone())) + &rep.op(2, 2, 2),
    );
    let j21_flat = &(&s(2, 0, 1, 0, Coeff::one()) + &s(1, 1, 0, 1, mc.clone())) - &(&kc() * &s(1, 0, 0, 0, Coeff::one()));
    gens.insert(GmName::J21, &j21_flat + &rep.op(2, 1, 2));
    gens.insert(GmName::J0, &(&s(1, 0, 1, 0, Coeff::one()) + &s(0, 1, 0, 1, mc)) - &kc());
    for i in 0..=m {
        gens.insert(GmName::TMinus(i), s(i as u32, 0, 0, 1, Coeff::one()));
    }
    let mut u = s(0, 1, m as u32, 0, Coeff::one());
    gens.insert(GmName::U(0), u.clone());
    for i in 1..=m {
        u = gens[&GmName::J21].commutator(&u)?;
        gens.insert(GmName::U(i), u.clone());
    }
    Ok(GmGeneratorSet { m, k, rep: rep.clone(), gens })
}

/// Membership of `[T_i^-, U_j]` in the span of words of length `≤ max_degree`
/// in `J12, J11, J22, J21, J0` with coefficients polynomial in `k` of degree
/// `≤ max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketMembership {
    pub lowering: usize,
    pub raising: usize,
    /// Smallest word length that suffices, `None` if none up to the cap.
    pub min_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GmClosureReport {
    pub m: usize,
    pub dim: usize,
    pub max_degree: usize,
    pub brackets: Vec<BracketMembership>,
}

impl GmClosureReport {
    pub fn closed(&self) -> bool {
        self.brackets.iter().all(|b| b.min_degree.is_some())
    }
}

pub fn gm_closure(gm: &GmGeneratorSet, max_degree: usize) -> GmClosureReport {
    let dim = gm.dim();
    let cartan: Vec<&MatrixDiffOp> = GM_CARTAN.iter().map(|n| gm.get(*n)).collect();
    // words grouped by length
    let mut by_len: Vec<Vec<MatrixDiffOp>> = vec![vec![MatrixDiffOp::identity(dim, 2)]];
    for len in 1..=max_degree {
        let prev = &by_len[len - 1];
        let next: Vec<MatrixDiffOp> = prev.iter().flat_map(|w| cartan.iter().map(move |g| w * *g)).collect();
        by_len.push(next);
    }
    let k_pow = |e: usize| {
        let mut pm = ParamMono::default();
        pm.0[Param::K.index()] = e as u32;
        Coeff::from_terms([(pm, QuadNum::one())])
    };
    let columns_upto = |deg: usize| {
        let mut cols = Vec::new();
        for words in by_len.iter().take(deg + 1) {
            for w in words {
                for e in 0..=max_degree {
                    cols.push(w.scale(&k_pow(e)).coordinates());
                }
            }
        }
        cols
    };
    let col_sets: Vec<_> = (0..=max_degree).map(columns_upto).collect();
    let mut brackets = Vec::new();
    for i in 0..=gm.m() {
        for j in 0..=gm.m() {
            let br = gm.get(GmName::TMinus(i)).commutator(gm.get(GmName::U(j))).expect("same shape");
            let target = br.coordinates();
            let min_degree = (0..=max_degree).find(|&deg| solve_columns(&col_sets[deg], &target).particular.is_some());
            brackets.push(BracketMembership { lowering: i, raising: j, min_degree });
        }
    }
    GmClosureReport { m: gm.m(), dim, max_degree, brackets }
}

/// Compares `span(g(1))` with the scalar `gl_3` realization under `x = x1`,
/// `y = x2`.
pub fn gm1_vs_gl3(k: Coeff) -> Result<SpanComparison> {
    let gm = build_gm(1, k.clone(), &GlMatrixRep::trivial(2))?;
    let gl = build_gl_np1(&RepSpec::new(2, k, GlMatrixRep::trivial(2))?);
    let a: Vec<_> = gm.iter().map(|(_, op)| op.coordinates()).collect();
    let b: Vec<_> = gl.iter().map(|(_, op)| op.coordinates()).collect();
    Ok(compare_spans(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Coeff;
    use num_traits::One;

    #[test]
    fn one_dimensional_block_is_zero() {
        let r = gl2_irrep(1).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                assert!(r.block(i, j)[0].is_zero());
            }
        }
    }

    #[test]
    fn two_dimensional_block_matches_reference() {
        let r = gl2_irrep(2).unwrap();
        let c = |v: i64| Coeff::int(v);
        assert_eq!(r.block(1, 2), &vec![c(0), c(1), c(0), c(0)]);
        assert_eq!(r.block(2, 1), &vec![c(0), c(0), c(1), c(0)]);
        assert_eq!(r.block(1, 1), &vec![c(1), c(0), c(0), c(0)]);
        assert_eq!(r.block(2, 2), &vec![c(0), c(0), c(0), c(1)]);
    }

    #[test]
    fn three_dimensional_block_has_sqrt2() {
        let r = gl2_irrep(3).unwrap();
        let z = Coeff::zero();
        let s = Coeff::sqrt2();
        assert_eq!(
            r.block(1, 2),
            &vec![z.clone(), s.clone(), z.clone(), z.clone(), z.clone(), s.clone(), z.clone(), z.clone(), z.clone()]
        );
        assert_eq!(
            r.block(2, 1),
            &vec![z.clone(), z.clone(), z.clone(), s.clone(), z.clone(), z.clone(), z.clone(), s.clone(), z.clone()]
        );
        assert_eq!(r.diagonal_weights(1), Some(vec![2, 1, 0]));
        assert_eq!(r.diagonal_weights(2), Some(vec![0, 1, 2]));
    }

    #[test]
    fn zero_dimension_rejected() {
        assert!(gl2_irrep(0).is_err());
    }

    #[test]
    fn larger_irreps_pass_canonical_check() {
        for d in 1..=6 {
            let r = gl2_irrep(d).unwrap();
            let rep = check_canonical(&r);
            assert!(rep.pass(), "d={d}");
            assert_eq!(rep.checked, 16);
        }
    }

    #[test]
    fn corrupted_entry_is_reported() {
        let r = gl2_irrep(2).unwrap().with_entry(1, 2, 0, 1, Coeff::int(2));
        let rep = check_canonical(&r);
        let f = rep.failure.expect("must fail");
        // first violated relation in lexicographic order
        assert_eq!(f.indices, [1, 2, 2, 1]);
        assert!(GlMatrixRep::new(2, 2, r.blocks.clone()).is_err());
        // the relation [M12, M21] = M11 − M22 itself also breaks
        let a = r.block(1, 2);
        let b = r.block(2, 1);
        let lhs = mat_comb(&mat_mul(2, a, b), &mat_mul(2, b, a), -1);
        assert_ne!(lhs, mat_comb(r.block(1, 1), r.block(2, 2), -1));
    }

    #[test]
    fn scalar_raising_generator_on_constant() {
        let g = build_gl_np1(&RepSpec::gl3(1).unwrap());
        let one = crate::weyl::PolySpinor::basis(1, 2, 0);
        let got = g.tp(1).apply(&one).unwrap();
        let want = crate::weyl::PolySpinor::unit(1, 0, crate::weyl::Polynomial::monomial(vec![1, 0], Coeff::k()));
        assert_eq!(got, want);
    }

    #[test]
    fn lower_spinor_from_upper() {
        let g = build_gl_np1(&RepSpec::gl3(2).unwrap());
        let p_plus = crate::weyl::PolySpinor::basis(2, 2, 0);
        let p_minus = crate::weyl::PolySpinor::basis(2, 2, 1);
        assert_eq!(g.e(2, 1).apply(&p_plus).unwrap(), p_minus);
    }

    #[test]
    fn raising_entries_two_by_two() {
        let g = build_gl_np1(&RepSpec::gl3(2).unwrap());
        let x1 = ScalarDiffOp::x(2, 0);
        assert_eq!(g.tp(2).entry(1, 0), &x1.neg());
        // upper-left of T1+ is x1(k − 1 − x1∂1 − x2∂2)
        let inner = ScalarDiffOp::constant(2, &Coeff::k() - &Coeff::one())
            .sub(&ScalarDiffOp::x(2, 0).compose(&ScalarDiffOp::d(2, 0)))
            .sub(&ScalarDiffOp::x(2, 1).compose(&ScalarDiffOp::d(2, 1)));
        assert_eq!(g.tp(1).entry(0, 0), &x1.compose(&inner));
        assert_eq!(g.tp(1).entry(0, 1), &ScalarDiffOp::x(2, 1).neg());
    }

    #[test]
    fn raising_entries_three_by_three() {
        let g = build_gl_np1(&RepSpec::gl3(3).unwrap());
        let m = ScalarDiffOp::x(2, 1).scale(&-Coeff::sqrt2());
        assert_eq!(g.tp(1).entry(0, 1), &m);
        assert_eq!(g.tp(1).entry(1, 2), &m);
        let m2 = ScalarDiffOp::x(2, 0).scale(&-Coeff::sqrt2());
        assert_eq!(g.tp(2).entry(1, 0), &m2);
        assert_eq!(g.tp(2).entry(2, 1), &m2);
    }

    #[test]
    fn gm_first_raising_generators() {
        let gm = build_gm(1, Coeff::k(), &GlMatrixRep::trivial(2)).unwrap();
        let y_dx = MatrixDiffOp::scalar(1, &ScalarDiffOp::monomial(vec![0, 1], vec![1, 0], Coeff::one()));
        assert_eq!(gm.get(GmName::U(0)), &y_dx);
        let y = MatrixDiffOp::x(1, 2, 1);
        assert_eq!(gm.get(GmName::U(1)), &-(&y * gm.get(GmName::J0)));
        assert!(gm.next_raising().is_zero());
    }

    #[test]
    fn tower_matches_closed_form_up_to_normalization() {
        for m in 1..=3 {
            let gm = build_gm(m, Coeff::k(), &GlMatrixRep::trivial(2)).unwrap();
            for i in 0..=m {
                let want = gm.raising_closed_form(i).scale(&gm.raising_normalization(i));
                assert_eq!(gm.get(GmName::U(i)), &want, "m={m} i={i}");
            }
            assert!(gm.next_raising().is_zero());
        }
    }

    #[test]
    fn gm_rejects_m_zero() {
        assert!(build_gm(0, Coeff::k(), &GlMatrixRep::trivial(2)).is_err());
    }
}
