//! Three-body Calogero and Sutherland operators in differential,
//! Lie-algebraic and matrix form, and their exact spectra on invariant
//! spinor spaces.
//!
//! Variables: `x1 = τ2, x2 = τ3` (Calogero) and `x1 = η2, x2 = η3`
//! (Sutherland).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::reps::{build_gl_np1, GeneratorSet, RepSpec};
use crate::repspace::{calogero_grade, gl3_space, matrix_of, total_grade, SpinorBasis};
use crate::roots::{roots, Root, UPoly};
use crate::scalar::{Bindings, Coeff, Param, QuadNum};
use crate::verify::IdentityReport;
use crate::weyl::{MatrixDiffOp, ScalarDiffOp};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Calogero,
    Sutherland,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Calogero => "calogero",
            ModelKind::Sutherland => "sutherland",
        })
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "calogero" => Ok(ModelKind::Calogero),
            "sutherland" => Ok(ModelKind::Sutherland),
            _ => Err(Error::Invalid(format!("unknown model '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelForm {
    /// Scalar operator with polynomial coefficients.
    Differential,
    /// Quadratic expression in `gl3` generators.
    LieAlgebraic,
    /// Expanded matrix operator in closed form for general `n`.
    Matrix,
}

impl fmt::Display for ModelForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelForm::Differential => "differential",
            ModelForm::LieAlgebraic => "liealgebraic",
            ModelForm::Matrix => "matrix",
        })
    }
}

impl std::str::FromStr for ModelForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "differential" => Ok(ModelForm::Differential),
            "liealgebraic" | "lie" => Ok(ModelForm::LieAlgebraic),
            "matrix" => Ok(ModelForm::Matrix),
            _ => Err(Error::Invalid(format!("unknown form '{s}'"))),
        }
    }
}

/// How the label `n` in the expanded matrix form is read.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NReading {
    /// `n = d − 1`, the second row of the Young label `[k, n]`.
    YoungLabel,
    /// `n = d`, the matrix size.
    MatrixSize,
}

impl NReading {
    pub fn value(self, d: usize) -> i64 {
        match self {
            NReading::YoungLabel => d as i64 - 1,
            NReading::MatrixSize => d as i64,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModelOperator {
    pub kind: ModelKind,
    pub form: ModelForm,
    pub d: usize,
    pub op: MatrixDiffOp,
}

fn p(param: Param) -> Coeff {
    Coeff::param(param)
}

fn c(n: i64) -> Coeff {
    Coeff::int(n)
}

fn fr(n: i64, d: i64) -> Coeff {
    Coeff::frac(n, d)
}

fn sop(xp: [u32; 2], dp: [u32; 2], coeff: Coeff) -> ScalarDiffOp {
    ScalarDiffOp::monomial(xp.to_vec(), dp.to_vec(), coeff)
}

fn sum(nvars: usize, terms: Vec<ScalarDiffOp>) -> ScalarDiffOp {
    terms.into_iter().fold(ScalarDiffOp::zero(nvars), |acc, t| acc.add(&t))
}

/// Coefficients of the Lie-algebraic Calogero operator
/// `a E11 T1⁻ + b E22 T1⁻ + c E12 E12 + e E11 + f T1⁻ + g E22`.
#[derive(Clone, Debug, PartialEq)]
pub struct CalogeroCoeffs {
    pub e11_t1: Coeff,
    pub e22_t1: Coeff,
    pub e12_e12: Coeff,
    pub e11: Coeff,
    pub t1: Coeff,
    pub e22: Coeff,
}

impl Default for CalogeroCoeffs {
    fn default() -> Self {
        let omega = p(Param::Omega);
        CalogeroCoeffs {
            e11_t1: c(-2),
            e22_t1: c(-6),
            e12_e12: fr(2, 3),
            e11: &c(-4) * &omega,
            t1: &c(-2) * &(&c(1) + &(&c(3) * &p(Param::Nu))),
            e22: &c(-6) * &omega,
        }
    }
}

/// Coefficients of the Lie-algebraic Sutherland operator.
#[derive(Clone, Debug, PartialEq)]
pub struct SutherlandCoeffs {
    pub e11_t1: Coeff,
    pub e22_t1: Coeff,
    pub e12_e12: Coeff,
    pub t1: Coeff,
    pub e21_e21: Coeff,
    /// Overall factor of the bracket `3E11² + 8E11E22 + 3E22² + (1+12ν)(E11+E22)`.
    pub bracket: Coeff,
    pub bracket_linear: Coeff,
}

impl Default for SutherlandCoeffs {
    fn default() -> Self {
        let a2 = &p(Param::Alpha) * &p(Param::Alpha);
        SutherlandCoeffs {
            e11_t1: c(-2),
            e22_t1: c(-6),
            e12_e12: fr(2, 3),
            t1: &c(-2) * &(&c(1) + &(&c(3) * &p(Param::Nu))),
            e21_e21: &(&a2 * &a2) * &fr(1, 24),
            bracket: &a2 * &fr(-1, 6),
            bracket_linear: &c(1) + &(&c(12) * &p(Param::Nu)),
        }
    }
}

/// `gl3` generators of the `[k, d−1]` representation with symbolic `k`.
pub fn model_generators(d: usize) -> Result<GeneratorSet> {
    Ok(build_gl_np1(&RepSpec::gl3(d)?))
}

pub fn calogero_lie(g: &GeneratorSet, co: &CalogeroCoeffs) -> MatrixDiffOp {
    let t1 = g.tm(1);
    let terms = [
        (g.e(1, 1) * t1).scale(&co.e11_t1),
        (g.e(2, 2) * t1).scale(&co.e22_t1),
        (g.e(1, 2) * g.e(1, 2)).scale(&co.e12_e12),
        g.e(1, 1).scale(&co.e11),
        t1.scale(&co.t1),
        g.e(2, 2).scale(&co.e22),
    ];
    terms.iter().fold(g.identity().zero_like(), |acc, t| &acc + t)
}

pub fn sutherland_lie(g: &GeneratorSet, co: &SutherlandCoeffs) -> MatrixDiffOp {
    let t1 = g.tm(1);
    let (e11, e22) = (g.e(1, 1), g.e(2, 2));
    let bracket = &(&(&(e11 * e11).scale(&c(3)) + &(e11 * e22).scale(&c(8))) + &(e22 * e22).scale(&c(3)))
        + &(e11 + e22).scale(&co.bracket_linear);
    let terms = [
        (e11 * t1).scale(&co.e11_t1),
        (e22 * t1).scale(&co.e22_t1),
        (g.e(1, 2) * g.e(1, 2)).scale(&co.e12_e12),
        t1.scale(&co.t1),
        (g.e(2, 1) * g.e(2, 1)).scale(&co.e21_e21),
        bracket.scale(&co.bracket),
    ];
    terms.iter().fold(g.identity().zero_like(), |acc, t| &acc + t)
}

/// Scalar algebraic form in `(τ2, τ3)`.
pub fn calogero_differential() -> ScalarDiffOp {
    let omega = p(Param::Omega);
    let nu = p(Param::Nu);
    sum(
        2,
        vec![
            sop([1, 0], [2, 0], c(-2)),
            sop([0, 1], [1, 1], c(-6)),
            sop([2, 0], [0, 2], fr(2, 3)),
            sop([1, 0], [1, 0], &c(-4) * &omega),
            sop([0, 0], [1, 0], &c(-2) * &(&c(1) + &(&c(3) * &nu))),
            sop([0, 1], [0, 1], &c(-6) * &omega),
        ],
    )
}

/// Scalar algebraic form in `(η2, η3)`.
pub fn sutherland_differential() -> ScalarDiffOp {
    let a2 = &p(Param::Alpha) * &p(Param::Alpha);
    let a4 = &a2 * &a2;
    let nu3 = &p(Param::Nu) + &fr(1, 3);
    sum(
        2,
        vec![
            sop([1, 0], [2, 0], c(-2)),
            sop([2, 0], [2, 0], &a2 * &fr(-1, 2)),
            sop([0, 2], [2, 0], &a4 * &fr(1, 24)),
            sop([0, 1], [1, 1], c(-6)),
            sop([1, 1], [1, 1], &a2 * &fr(-4, 3)),
            sop([2, 0], [0, 2], fr(2, 3)),
            sop([0, 2], [0, 2], &a2 * &fr(-1, 2)),
            sop([0, 0], [1, 0], &c(-2) * &(&c(1) + &(&c(3) * &p(Param::Nu)))),
            sop([1, 0], [1, 0], &(&c(-2) * &nu3) * &a2),
            sop([0, 1], [0, 1], &(&c(-2) * &nu3) * &a2),
        ],
    )
}

/// Expanded matrix Calogero operator, with `n` a number.
pub fn calogero_matrix_expanded(g: &GeneratorSet, n: i64) -> MatrixDiffOp {
    let dim = g.dim();
    let omega = p(Param::Omega);
    let nu = p(Param::Nu);
    let s = |op: ScalarDiffOp| MatrixDiffOp::scalar(dim, &op);
    let (m12, m22) = (g.m(1, 2), g.m(2, 2));
    let nz = g.scalar(c(n));
    let d1 = g.d(1);
    let d2 = g.d(2);
    let x1 = g.x(1);
    let flat = s(sum(
        2,
        vec![
            sop([1, 0], [2, 0], c(-2)),
            sop([0, 1], [1, 1], c(-6)),
            sop([2, 0], [0, 2], fr(2, 3)),
            sop([1, 0], [1, 0], &c(-4) * &omega),
            sop([0, 0], [1, 0], &c(-2) * &(&c(1) + &(&c(3) * &nu))),
            sop([0, 1], [0, 1], &c(-6) * &omega),
        ],
    ));
    let n_term = (&(&nz - &m22.scale(&c(2))) * &d1).scale(&c(-2));
    let m12_term = (&m12 * &(&x1 * &d2)).scale(&fr(4, 3));
    let consts = &(&(&m12 * &m12).scale(&fr(2, 3)) - &nz.scale(&(&c(4) * &omega))) - &m22.scale(&(&c(2) * &omega));
    &(&(&flat + &n_term) + &m12_term) + &consts
}

/// Expanded matrix Sutherland operator, with `n` a number.
pub fn sutherland_matrix_expanded(g: &GeneratorSet, n: i64) -> MatrixDiffOp {
    let dim = g.dim();
    let a2 = &p(Param::Alpha) * &p(Param::Alpha);
    let a4 = &a2 * &a2;
    let nu = p(Param::Nu);
    let nu3 = &nu + &fr(1, 3);
    let s = |op: ScalarDiffOp| MatrixDiffOp::scalar(dim, &op);
    let (m11, m12, m21, m22) = (g.m(1, 1), g.m(1, 2), g.m(2, 1), g.m(2, 2));
    let nz = g.scalar(c(n));
    let (x1, x2, d1, d2) = (g.x(1), g.x(2), g.d(1), g.d(2));
    let flat = s(sum(
        2,
        vec![
            sop([1, 0], [2, 0], c(-2)),
            sop([2, 0], [2, 0], &a2 * &fr(-1, 2)),
            sop([0, 2], [2, 0], &a4 * &fr(1, 24)),
            sop([0, 1], [1, 1], c(-6)),
            sop([1, 1], [1, 1], &a2 * &fr(-4, 3)),
            sop([2, 0], [0, 2], fr(2, 3)),
            sop([0, 2], [0, 2], &a2 * &fr(-1, 2)),
            sop([0, 0], [1, 0], &c(-2) * &(&c(1) + &(&c(3) * &nu))),
            sop([1, 0], [1, 0], &(&c(-2) * &nu3) * &a2),
            sop([0, 1], [0, 1], &(&c(2) * &nu3) * &a2),
        ],
    ));
    let x1d1 = &x1 * &d1;
    let x2d2 = &x2 * &d2;
    let terms = [
        (&(&nz - &m22.scale(&c(2))) * &d1).scale(&c(-2)),
        (&m21 * &(&x2 * &d1)).scale(&(&a4 * &fr(1, 24))),
        (&m12 * &(&x1 * &d2)).scale(&fr(-4, 3)),
        (&(&(&nz * &(&x1d1 + &x2d2)).scale(&c(3)) + &(&m11 * &x2d2)) + &(&m22 * &x1d1)).scale(&(&a2 * &fr(-1, 3))),
        (&m12 * &m12).scale(&fr(2, 3)),
        (&m21 * &m21).scale(&(&a4 * &fr(1, 24))),
        (&(&m11 * &m22).scale(&c(2)) + &g.scalar(&(&(&c(1) + &(&c(12) * &nu)) + &c(3 * n)) * &c(n)))
            .scale(&(&a2 * &fr(-1, 6))),
    ];
    terms.iter().fold(flat, |acc, t| &acc + t)
}

pub fn calogero(form: ModelForm, d: usize) -> Result<ModelOperator> {
    build(ModelKind::Calogero, form, d, NReading::YoungLabel)
}

pub fn sutherland(form: ModelForm, d: usize) -> Result<ModelOperator> {
    build(ModelKind::Sutherland, form, d, NReading::YoungLabel)
}

pub fn build(kind: ModelKind, form: ModelForm, d: usize, reading: NReading) -> Result<ModelOperator> {
    if d == 0 {
        return Err(Error::Invalid("matrix size must be at least 1".into()));
    }
    let op = match form {
        ModelForm::Differential => {
            if d != 1 {
                return Err(Error::Invalid("the differential form is scalar (d = 1)".into()));
            }
            let s = match kind {
                ModelKind::Calogero => calogero_differential(),
                ModelKind::Sutherland => sutherland_differential(),
            };
            MatrixDiffOp::scalar(1, &s)
        }
        ModelForm::LieAlgebraic => {
            let g = model_generators(d)?;
            match kind {
                ModelKind::Calogero => calogero_lie(&g, &CalogeroCoeffs::default()),
                ModelKind::Sutherland => sutherland_lie(&g, &SutherlandCoeffs::default()),
            }
        }
        ModelForm::Matrix => {
            let g = model_generators(d)?;
            let n = reading.value(d);
            match kind {
                ModelKind::Calogero => calogero_matrix_expanded(&g, n),
                ModelKind::Sutherland => sutherland_matrix_expanded(&g, n),
            }
        }
    };
    Ok(ModelOperator { kind, form, d, op })
}

/// Lie-algebraic form with `[k, 0]` generators against the scalar
/// differential form.
pub fn algebraic_check(kind: ModelKind) -> Result<IdentityReport> {
    let lie = build(kind, ModelForm::LieAlgebraic, 1, NReading::YoungLabel)?;
    let diff = build(kind, ModelForm::Differential, 1, NReading::YoungLabel)?;
    IdentityReport::new(format!("{kind}: lie-algebraic = differential"), lie.op, diff.op)
}

/// Lie-algebraic form with `[k, d−1]` generators against the expanded
/// expanded matrix form under the given reading of `n`.
pub fn consistency_check(kind: ModelKind, d: usize, reading: NReading) -> Result<IdentityReport> {
    let lie = build(kind, ModelForm::LieAlgebraic, d, reading)?;
    let shown = build(kind, ModelForm::Matrix, d, reading)?;
    let n = reading.value(d);
    IdentityReport::new(format!("{kind} d={d} n={n}: lie-algebraic = expanded matrix"), lie.op, shown.op)
}

/// Invariant space `V_k` of the `[k, d−1]` representation, as a weight
/// basis graded for the given model.
pub fn model_space(kind: ModelKind, k: u32, d: usize) -> Result<SpinorBasis> {
    let basis = match kind {
        ModelKind::Calogero => gl3_space(k, d, calogero_grade)?,
        ModelKind::Sutherland => gl3_space(k, d, total_grade)?,
    };
    Ok(basis.relabel(format!("V[k={k},d={d},{kind}]")))
}

/// Exact spectrum of an operator restricted to an invariant space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub kind: ModelKind,
    pub form: ModelForm,
    pub k: u32,
    pub d: usize,
    pub bindings: BTreeMap<Param, String>,
    pub dimension: usize,
    pub block_sizes: Vec<usize>,
    pub block_triangular: bool,
    /// Characteristic polynomial of each diagonal block, lowest degree first.
    pub block_charpolys: Vec<Vec<QuadNum>>,
    pub eigenvalues: Vec<Root>,
}

impl SpectrumResult {
    pub fn exact_eigenvalues(&self) -> Option<Vec<QuadNum>> {
        self.eigenvalues.iter().map(|r| r.as_exact().cloned()).collect()
    }
}

fn is_block_upper_triangular(m: &DenseMatrix<QuadNum>, grades: &[i64]) -> bool {
    let n = m.rows();
    (0..n).all(|i| (0..n).all(|j| grades[i] <= grades[j] || m.get(i, j).is_zero()))
}

/// Eigenvalues of `model` on `V_k` of the `[k, d−1]` representation with all
/// parameters bound.
pub fn spectrum(model: &ModelOperator, k: u32, bindings: &Bindings) -> Result<SpectrumResult> {
    let op = model.op.substitute(bindings);
    let free = op.params();
    if !free.is_empty() {
        return Err(Error::UnboundParameter(free));
    }
    let basis = model_space(model.kind, k, model.d)?;
    let m = matrix_of(&op, &basis)?.numeric().expect("all parameters bound");
    let grades = basis.grades().to_vec();
    let block_triangular = is_block_upper_triangular(&m, &grades);
    let blocks: Vec<std::ops::Range<usize>> = if block_triangular { basis.grade_blocks() } else { vec![0..m.rows()] };
    let mut block_charpolys = Vec::new();
    let mut eigenvalues = Vec::new();
    for r in &blocks {
        let idx: Vec<usize> = r.clone().collect();
        let b = m.principal(&idx);
        if b.is_diagonal() {
            let mut diag: Vec<QuadNum> = (0..b.rows()).map(|i| b.get(i, i).clone()).collect();
            diag.sort();
            let cp = diag.iter().fold(UPoly::new(vec![QuadNum::one()]), |acc, e| {
                acc.mul(&UPoly::new(vec![-e.clone(), QuadNum::one()]))
            });
            block_charpolys.push(cp.coeffs().to_vec());
            eigenvalues.extend(diag.into_iter().map(|value| Root::Exact { value }));
        } else {
            let cp = b.charpoly();
            eigenvalues.extend(roots(&UPoly::new(cp.clone())));
            block_charpolys.push(cp);
        }
    }
    debug_assert_eq!(eigenvalues.len(), basis.len());
    Ok(SpectrumResult {
        kind: model.kind,
        form: model.form,
        k,
        d: model.d,
        bindings: bindings.iter().map(|(p, v)| (*p, v.to_string())).collect(),
        dimension: basis.len(),
        block_sizes: blocks.iter().map(|r| r.len()).collect(),
        block_triangular,
        block_charpolys,
        eigenvalues,
    })
}

/// `{−2ω(2p1 + 3p2) : p1 + p2 ≤ k}` with multiplicity.
pub fn calogero_pattern(k: u32, omega: &QuadNum) -> Vec<QuadNum> {
    let mut v = Vec::new();
    for p1 in 0..=k {
        for p2 in 0..=(k - p1) {
            v.push(omega * &QuadNum::int(-2 * (2 * p1 as i64 + 3 * p2 as i64)));
        }
    }
    v.sort();
    v
}

/// Comparison of a matrix-model spectrum with the scalar one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralComparison {
    pub matrix: Vec<QuadNum>,
    pub scalar: Vec<QuadNum>,
    pub multiset_equal: bool,
    pub set_equal: bool,
    pub matrix_values_in_scalar_set: bool,
}

impl SpectralComparison {
    pub fn new(mut matrix: Vec<QuadNum>, mut scalar: Vec<QuadNum>) -> Self {
        matrix.sort();
        scalar.sort();
        let mut ms = matrix.clone();
        ms.dedup();
        let mut ss = scalar.clone();
        ss.dedup();
        SpectralComparison {
            multiset_equal: matrix == scalar,
            set_equal: ms == ss,
            matrix_values_in_scalar_set: ms.iter().all(|v| ss.binary_search(v).is_ok()),
            matrix,
            scalar,
        }
    }

    pub fn verdict(&self) -> &'static str {
        if self.multiset_equal {
            "same multiset"
        } else if self.set_equal {
            "same values, different multiplicities"
        } else if self.matrix_values_in_scalar_set {
            "values contained in the scalar spectrum"
        } else {
            "different"
        }
    }
}

/// Scalar Calogero values `−2ω(2p1 + 3p2)`, `p1, p2 ≥ 0`, not exceeding
/// `bound` in absolute value; stands in for the infinite scalar spectrum.
pub fn calogero_pattern_up_to(bound: i64, omega: &QuadNum) -> Vec<QuadNum> {
    let mut v = Vec::new();
    for p1 in 0..=bound {
        for p2 in 0..=bound {
            let g = 2 * p1 + 3 * p2;
            if g <= bound {
                v.push(omega * &QuadNum::int(-2 * g));
            }
        }
    }
    v.sort();
    v.dedup();
    v
}

fn exact_values(s: &SpectrumResult) -> Result<Vec<QuadNum>> {
    s.exact_eigenvalues()
        .ok_or_else(|| Error::Invalid(format!("{} spectrum at k={}, d={} is not exact", s.kind, s.k, s.d)))
}

/// Compares a spectrum with the scalar model of the same kind on
/// polynomials of degree `<= scalar_k` under the same bindings.
pub fn compare_with_scalar(s: &SpectrumResult, bindings: &Bindings, scalar_k: u32) -> Result<SpectralComparison> {
    let scalar = build(s.kind, ModelForm::LieAlgebraic, 1, NReading::YoungLabel)?;
    let reference = spectrum(&scalar, scalar_k, bindings)?;
    Ok(SpectralComparison::new(exact_values(s)?, exact_values(&reference)?))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumRecord {
    pub spectrum: SpectrumResult,
    /// Degree of the scalar space used as reference.
    pub scalar_k: u32,
    pub comparison: SpectralComparison,
    pub verdict: String,
}

/// Spectra of the Lie-algebraic models for each `(kind, d, k)` job,
/// compared against the scalar model up to degree `k + d`.
pub fn spectrum_grid(jobs: &[(ModelKind, usize, u32)], bindings: &Bindings) -> Vec<Result<SpectrumRecord>> {
    use rayon::prelude::*;
    jobs.par_iter()
        .map(|&(kind, d, k)| {
            let model = build(kind, ModelForm::LieAlgebraic, d, NReading::YoungLabel)?;
            let spectrum = spectrum(&model, k, bindings)?;
            let scalar_k = k + d as u32;
            let comparison = compare_with_scalar(&spectrum, bindings, scalar_k)?;
            let verdict = comparison.verdict().to_string();
            Ok(SpectrumRecord { spectrum, scalar_k, comparison, verdict })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn bind(omega: i64, nu: i64) -> Bindings {
        let mut b = Bindings::new();
        b.insert(Param::Omega, rat(omega));
        b.insert(Param::Nu, rat(nu));
        b
    }

    #[test]
    fn scalar_forms_agree() {
        assert!(algebraic_check(ModelKind::Calogero).unwrap().pass);
        assert!(algebraic_check(ModelKind::Sutherland).unwrap().pass);
    }

    #[test]
    fn scalar_calogero_spectrum_k2() {
        let m = calogero(ModelForm::LieAlgebraic, 1).unwrap();
        let s = spectrum(&m, 2, &bind(1, 0)).unwrap();
        let mut got = s.exact_eigenvalues().unwrap();
        got.sort();
        let want: Vec<QuadNum> = [-12, -10, -8, -6, -4, 0].iter().map(|&v| QuadNum::int(v)).collect();
        assert_eq!(got, want);
        assert!(s.block_triangular);
    }

    #[test]
    fn constant_is_ground_state() {
        let m = calogero(ModelForm::Differential, 1).unwrap();
        let s = spectrum(&m, 0, &bind(3, 1)).unwrap();
        assert_eq!(s.exact_eigenvalues().unwrap(), vec![QuadNum::zero()]);
    }

    #[test]
    fn unbound_parameters_are_reported() {
        let m = calogero(ModelForm::LieAlgebraic, 1).unwrap();
        assert!(matches!(spectrum(&m, 1, &Bindings::new()), Err(Error::UnboundParameter(_))));
    }

    #[test]
    fn differential_form_is_scalar_only() {
        assert!(calogero(ModelForm::Differential, 2).is_err());
    }

    #[test]
    fn pattern_counts() {
        assert_eq!(calogero_pattern(2, &QuadNum::one()).len(), 6);
        let c = SpectralComparison::new(vec![QuadNum::int(-4), QuadNum::int(0)], calogero_pattern(1, &QuadNum::one()));
        assert!(!c.multiset_equal && c.matrix_values_in_scalar_set);
    }

    #[test]
    fn k_below_young_row_is_rejected() {
        assert!(model_space(ModelKind::Calogero, 0, 2).is_err());
    }

    #[test]
    fn matrix_calogero_values_follow_weights() {
        let b = bind(1, 0);
        let rec = spectrum_grid(&[(ModelKind::Calogero, 2, 1)], &b).pop().unwrap().unwrap();
        let want: Vec<QuadNum> = [-10, -6, -4].iter().map(|&v| QuadNum::int(v)).collect();
        assert_eq!(rec.comparison.matrix, want);
        assert!(rec.comparison.matrix_values_in_scalar_set);
        assert!(!rec.comparison.multiset_equal);
    }
}
