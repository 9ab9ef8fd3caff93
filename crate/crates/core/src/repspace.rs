//! Finite-dimensional invariant spaces of spinors: monomial bases, orbit
//! closure, weight-graded bases, Newton-hexagon audits and restriction of
//! operators to matrices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::linalg::{DenseMatrix, Insertion, SparseEchelon};
use crate::reps::{build_gl_np1, GlMatrixRep, RepSpec};
use crate::scalar::{Coeff, Param, QuadNum};
use crate::weyl::{MatrixDiffOp, PolySpinor, Polynomial};

/// Coordinate key of a spinor: `(component, exponents)`.
pub type SpinorKey = (usize, Vec<u32>);
pub type SpinorCoords = BTreeMap<SpinorKey, QuadNum>;

fn numeric_coords(v: &PolySpinor) -> Result<SpinorCoords> {
    v.coords().ok_or_else(|| Error::UnboundParameter(spinor_params(v)))
}

fn spinor_params(v: &PolySpinor) -> Vec<Param> {
    let mut ps: Vec<Param> = v
        .components()
        .iter()
        .flat_map(|p| p.terms().flat_map(|(_, c)| c.params()).collect::<Vec<_>>())
        .collect();
    ps.sort();
    ps.dedup();
    ps
}

fn symbolic_coords(v: &PolySpinor) -> BTreeMap<SpinorKey, Coeff> {
    let mut out = BTreeMap::new();
    for (i, p) in v.components().iter().enumerate() {
        for (m, c) in p.terms() {
            out.insert((i, m.clone()), c.clone());
        }
    }
    out
}

/// Ordered, linearly independent spinors with a grade per vector.
#[derive(Clone, Debug)]
pub struct SpinorBasis {
    dim: usize,
    nvars: usize,
    vectors: Vec<PolySpinor>,
    grades: Vec<i64>,
    weights: Option<Vec<Vec<i64>>>,
    label: String,
}

impl SpinorBasis {
    /// Validates independence and non-decreasing grades.
    pub fn new(dim: usize, nvars: usize, vectors: Vec<PolySpinor>, grades: Vec<i64>, label: impl Into<String>) -> Result<Self> {
        check_dim("grade labels", grades.len(), vectors.len())?;
        if grades.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid("basis grades must be non-decreasing".into()));
        }
        let mut e = SparseEchelon::new();
        for (i, v) in vectors.iter().enumerate() {
            check_dim("spinor size", v.dim(), dim)?;
            check_dim("spinor arity", v.nvars(), nvars)?;
            if let Insertion::Dependent(_) = e.insert(&numeric_coords(v)?) {
                return Err(Error::Invalid(format!("basis vector {i} is linearly dependent")));
            }
        }
        Ok(SpinorBasis { dim, nvars, vectors, grades, weights: None, label: label.into() })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn spinor_dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn vectors(&self) -> &[PolySpinor] {
        &self.vectors
    }

    pub fn grades(&self) -> &[i64] {
        &self.grades
    }

    /// Weights of the vectors when the basis is a weight basis.
    pub fn weights(&self) -> Option<&[Vec<i64>]> {
        self.weights.as_deref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn echelon(&self) -> SparseEchelon<SpinorKey> {
        let mut e = SparseEchelon::new();
        for v in &self.vectors {
            e.insert(&v.coords().expect("numeric basis"));
        }
        e
    }

    pub fn contains(&self, v: &PolySpinor) -> Result<bool> {
        Ok(self.echelon().contains(&numeric_coords(v)?))
    }

    /// Exact span containment `span(self) ⊆ span(other)`.
    pub fn is_subspace_of(&self, other: &SpinorBasis) -> bool {
        let e = other.echelon();
        self.vectors.iter().all(|v| e.contains(&v.coords().expect("numeric basis")))
    }

    /// Largest polynomial degree among the vectors.
    pub fn max_degree(&self) -> u32 {
        self.vectors.iter().filter_map(|v| v.degree()).max().unwrap_or(0)
    }

    /// Index boundaries of runs of equal grade.
    pub fn grade_blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.grades.len() {
            if i == self.grades.len() || self.grades[i] != self.grades[start] {
                out.push(start..i);
                start = i;
            }
        }
        out
    }
}

/// Monomials `x^p1 y^p2` with `p1 + m p2 ≤ k`, graded by `p1 + m p2`.
pub fn scalar_basis(k: u32, m: u32) -> Result<SpinorBasis> {
    if m == 0 {
        return Err(Error::Invalid("scalar_basis needs m >= 1".into()));
    }
    let mut items = Vec::new();
    for p2 in 0..=k / m {
        for p1 in 0..=(k - m * p2) {
            items.push(((p1 + m * p2) as i64, p2, p1));
        }
    }
    items.sort();
    let vectors = items
        .iter()
        .map(|&(_, p2, p1)| PolySpinor::unit(1, 0, Polynomial::monomial(vec![p1, p2], Coeff::int(1))))
        .collect();
    let grades = items.iter().map(|t| t.0).collect();
    SpinorBasis::new(1, 2, vectors, grades, format!("P[k={k},m={m}]"))
}

/// Smallest space containing `seeds` and stable under every operator in
/// `gens`. Operators must carry numeric coefficients. Vectors are graded by
/// polynomial degree in discovery order.
pub fn orbit_closure(gens: &[MatrixDiffOp], seeds: &[PolySpinor], degree_cap: u32) -> Result<SpinorBasis> {
    let first = seeds.first().ok_or_else(|| Error::Invalid("orbit closure needs a seed".into()))?;
    let (dim, nvars) = (first.dim(), first.nvars());
    for g in gens {
        check_dim("operator size", g.dim(), dim)?;
        let ps = g.params();
        if !ps.is_empty() {
            return Err(Error::UnboundParameter(ps));
        }
    }
    let mut e = SparseEchelon::new();
    let mut found: Vec<PolySpinor> = Vec::new();
    let mut queue = VecDeque::new();
    let offer = |v: PolySpinor, e: &mut SparseEchelon<SpinorKey>, found: &mut Vec<PolySpinor>, queue: &mut VecDeque<usize>| -> Result<()> {
        if v.is_zero() {
            return Ok(());
        }
        if let Insertion::Independent(_) = e.insert(&numeric_coords(&v)?) {
            let deg = v.degree().unwrap_or(0);
            if deg > degree_cap {
                return Err(Error::DegreeCapExceeded { cap: degree_cap, found: deg, dim_so_far: found.len() });
            }
            queue.push_back(found.len());
            found.push(v);
        }
        Ok(())
    };
    for s in seeds {
        check_dim("seed size", s.dim(), dim)?;
        if s.is_zero() {
            return Err(Error::Invalid("orbit closure seeds must be nonzero".into()));
        }
        offer(s.clone(), &mut e, &mut found, &mut queue)?;
    }
    while let Some(i) = queue.pop_front() {
        let v = found[i].clone();
        for g in gens {
            offer(g.apply(&v)?, &mut e, &mut found, &mut queue)?;
        }
    }
    let grades: Vec<i64> = found.iter().map(|v| v.degree().unwrap_or(0) as i64).collect();
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by_key(|&i| grades[i]);
    Ok(SpinorBasis {
        dim,
        nvars,
        grades: order.iter().map(|&i| grades[i]).collect(),
        vectors: order.into_iter().map(|i| found[i].clone()).collect(),
        weights: None,
        label: "orbit".into(),
    })
}

/// Weight of the coordinate `(c, x^a)`: `a_i + (M_ii)_cc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap {
    shifts: Vec<Vec<i64>>,
}

impl WeightMap {
    pub fn from_rep(rep: &GlMatrixRep) -> Result<Self> {
        let shifts = (1..=rep.n())
            .map(|i| rep.diagonal_weights(i).ok_or_else(|| Error::Invalid(format!("M{i}{i} is not an integer diagonal matrix"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightMap { shifts })
    }

    pub fn weight(&self, key: &SpinorKey) -> Vec<i64> {
        let (c, m) = key;
        m.iter().zip(&self.shifts).map(|(a, s)| *a as i64 + s[*c]).collect()
    }

    /// Weight of `v` if all its coordinates share one.
    pub fn weight_of(&self, v: &PolySpinor) -> Option<Vec<i64>> {
        let coords = symbolic_coords(v);
        let mut ws = coords.keys().map(|k| self.weight(k));
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }
}

/// `2 w1 + 3 w2`.
pub fn calogero_grade(w: &[i64]) -> i64 {
    2 * w[0] + 3 * w[1]
}

/// `w1 + w2`.
pub fn total_grade(w: &[i64]) -> i64 {
    w.iter().sum()
}

/// Re-expresses `basis` through weight vectors sorted by `grade(weight)`,
/// then weight, then a canonical reduced form inside each weight space.
/// Fails if the span is not a sum of weight spaces.
pub fn weight_basis(basis: &SpinorBasis, weights: &WeightMap, grade: impl Fn(&[i64]) -> i64) -> Result<SpinorBasis> {
    let mut parts: BTreeMap<Vec<i64>, SparseEchelon<SpinorKey>> = BTreeMap::new();
    for v in &basis.vectors {
        let mut split: BTreeMap<Vec<i64>, SpinorCoords> = BTreeMap::new();
        for (k, c) in numeric_coords(v)? {
            split.entry(weights.weight(&k)).or_default().insert(k, c);
        }
        for (w, piece) in split {
            parts.entry(w).or_default().insert(&piece);
        }
    }
    let total: usize = parts.values().map(|e| e.rank()).sum();
    if total != basis.len() {
        return Err(Error::Invalid(format!(
            "span is not weight-graded: {} weight components for dimension {}",
            total,
            basis.len()
        )));
    }
    let mut items: Vec<(i64, Vec<i64>, SpinorCoords)> = Vec::new();
    for (w, e) in parts {
        let g = grade(&w);
        for (_, row) in e.row_vectors() {
            items.push((g, w.clone(), row.clone()));
        }
    }
    items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(SpinorBasis {
        dim: basis.dim,
        nvars: basis.nvars,
        vectors: items.iter().map(|(_, _, c)| PolySpinor::from_coords(basis.dim, basis.nvars, c)).collect(),
        grades: items.iter().map(|t| t.0).collect(),
        weights: Some(items.into_iter().map(|t| t.1).collect()),
        label: basis.label.clone(),
    })
}

/// Restriction of an operator to a basis; column `j` holds the coordinates
/// of `op(basis[j])`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    pub entries: DenseMatrix<Coeff>,
    pub basis_label: String,
}

impl OperatorMatrix {
    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn substitute(&self, b: &crate::scalar::Bindings) -> OperatorMatrix {
        OperatorMatrix { entries: self.entries.map(|c| c.substitute(b)), basis_label: self.basis_label.clone() }
    }

    /// Entries as plain numbers, if no parameter remains.
    pub fn numeric(&self) -> Option<DenseMatrix<QuadNum>> {
        let n = self.dim();
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.entries.get(i, j).as_constant()?);
            }
        }
        Some(m)
    }
}

pub fn matrix_of(op: &MatrixDiffOp, basis: &SpinorBasis) -> Result<OperatorMatrix> {
    check_dim("operator size", op.dim(), basis.dim)?;
    let e = basis.echelon();
    let n = basis.len();
    let mut m = DenseMatrix::zeros(n, n);
    for (j, b) in basis.vectors.iter().enumerate() {
        let image = op.apply(b)?;
        let (res, coords) = e.reduce(&symbolic_coords(&image), &Coeff::zero());
        if !res.is_empty() {
            let residual = PolySpinor::new(
                basis.nvars,
                (0..basis.dim)
                    .map(|c| Polynomial::from_terms(basis.nvars, res.iter().filter(|((i, _), _)| *i == c).map(|((_, mono), v)| (mono.clone(), v.clone()))))
                    .collect(),
            );
            return Err(Error::NotInvariant { index: j, residual: residual.to_string() });
        }
        for (i, c) in coords {
            m.set(i, j, c);
        }
    }
    Ok(OperatorMatrix { entries: m, basis_label: basis.label.clone() })
}

/// Finite-dimensional space of the `[k, d−1]` representation of `gl3`:
/// orbit closure of the lowest component `P₋ = e_(d−1)`, returned as a
/// weight basis ordered by `grade`.
pub fn gl3_space(k: u32, d: usize, grade: impl Fn(&[i64]) -> i64) -> Result<SpinorBasis> {
    if d == 0 || (k as usize) + 1 < d {
        return Err(Error::Invalid(format!("label [k={k}, {}] needs k >= d - 1", d.saturating_sub(1))));
    }
    let spec = RepSpec::gl3(d)?;
    let mut b = crate::scalar::Bindings::new();
    b.insert(Param::K, crate::scalar::rat(k as i64));
    let gens = build_gl_np1(&spec).substitute(&b);
    let seed = PolySpinor::basis(d, 2, d - 1);
    let raw = orbit_closure(&gens.ops(), &[seed], k + d as u32)?;
    let basis = weight_basis(&raw, &WeightMap::from_rep(&spec.rep)?, grade)?;
    Ok(basis.relabel(format!("V[k={k},d={d}]")))
}

/// Census of one point of a weight diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightPoint {
    pub weight: Vec<i64>,
    pub multiplicity: usize,
    pub on_boundary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HexagonReport {
    pub k: u32,
    pub dim: usize,
    pub expected_dim: usize,
    pub points: Vec<WeightPoint>,
    pub hull: Vec<Vec<i64>>,
    /// Boundary points with multiplicity other than one.
    pub bad_boundary: Vec<Vec<i64>>,
    /// Interior points with multiplicity other than two.
    pub bad_interior: Vec<Vec<i64>>,
    pub layers: usize,
    pub top_layer_ok: bool,
    pub lower_part_ok: bool,
}

impl HexagonReport {
    pub fn pass(&self) -> bool {
        self.dim == self.expected_dim
            && self.bad_boundary.is_empty()
            && self.bad_interior.is_empty()
            && self.layers == self.k as usize + 1
            && self.top_layer_ok
            && self.lower_part_ok
    }
}

fn cross(o: &[i64], a: &[i64], b: &[i64]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Monotone chain, counter-clockwise, collinear points dropped.
fn convex_hull(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut p: Vec<Vec<i64>> = points.to_vec();
    p.sort();
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut lower: Vec<Vec<i64>> = Vec::new();
    for q in &p {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], q) <= 0 {
            lower.pop();
        }
        lower.push(q.clone());
    }
    let mut upper: Vec<Vec<i64>> = Vec::new();
    for q in p.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], q) <= 0 {
            upper.pop();
        }
        upper.push(q.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn on_hull_boundary(hull: &[Vec<i64>], q: &[i64]) -> bool {
    let n = hull.len();
    (0..n).any(|i| {
        let a = &hull[i];
        let b = &hull[(i + 1) % n];
        cross(a, b, q) == 0
            && q[0] >= a[0].min(b[0])
            && q[0] <= a[0].max(b[0])
            && q[1] >= a[1].min(b[1])
            && q[1] <= a[1].max(b[1])
    })
}

/// Spinor `(x2^(k−i) x1^i, −x2^(k−i−1) x1^(i+1))`.
pub fn top_layer_vector(k: u32, i: u32) -> PolySpinor {
    PolySpinor::new(
        2,
        vec![
            Polynomial::monomial(vec![i, k - i], Coeff::int(1)),
            Polynomial::monomial(vec![i + 1, k - i - 1], Coeff::int(-1)),
        ],
    )
}

/// Newton-hexagon audit of a `[k, 1]` space given as a weight basis for the
/// two-dimensional block.
pub fn hexagon_audit(basis: &SpinorBasis, k: u32) -> Result<HexagonReport> {
    let weights = basis
        .weights()
        .ok_or_else(|| Error::Invalid("hexagon audit needs a weight basis".into()))?;
    let mut mult: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for w in weights {
        *mult.entry(w.clone()).or_default() += 1;
    }
    let pts: Vec<Vec<i64>> = mult.keys().cloned().collect();
    let hull = convex_hull(&pts);
    let mut bad_boundary = Vec::new();
    let mut bad_interior = Vec::new();
    let points: Vec<WeightPoint> = mult
        .iter()
        .map(|(w, &m)| {
            let on_boundary = on_hull_boundary(&hull, w);
            if on_boundary && m != 1 {
                bad_boundary.push(w.clone());
            }
            if !on_boundary && m != 2 {
                bad_interior.push(w.clone());
            }
            WeightPoint { weight: w.clone(), multiplicity: m, on_boundary }
        })
        .collect();
    let layers: BTreeSet<i64> = pts.iter().map(|w| total_grade(w)).collect();
    let top = layers.iter().next_back().copied().unwrap_or(0);
    // the highest layer is spanned by the listed homogeneous spinors
    let top_vectors: Vec<PolySpinor> =
        basis.vectors().iter().zip(weights).filter(|(_, w)| total_grade(w) == top).map(|(v, _)| v.clone()).collect();
    let n_top = top_vectors.len();
    let top_basis = SpinorBasis::new(2, 2, top_vectors, vec![top; n_top], "top");
    let listed: Vec<PolySpinor> = (0..k).map(|i| top_layer_vector(k, i)).collect();
    let top_layer_ok = match (top_basis, SpinorBasis::new(2, 2, listed, vec![0; k as usize], "listed")) {
        (Ok(a), Ok(b)) => a.len() == b.len() && a.is_subspace_of(&b) && b.is_subspace_of(&a),
        _ => false,
    };
    // all spinors of degree ≤ k − 1 lie in the space
    let lower_part_ok = k == 0 || {
        let e = basis.echelon();
        (0..2).all(|c| {
            (0..k).all(|deg| {
                (0..=deg).all(|a| {
                    let mut v = SpinorCoords::new();
                    v.insert((c, vec![a, deg - a]), QuadNum::int(1));
                    e.contains(&v)
                })
            })
        })
    };
    Ok(HexagonReport {
        k,
        dim: basis.len(),
        expected_dim: (k * (k + 2)) as usize,
        points,
        hull,
        bad_boundary,
        bad_interior,
        layers: layers.len(),
        top_layer_ok,
        lower_part_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{build_gl_np1, gl2_irrep, RepSpec};
    use crate::scalar::{rat, Bindings};

    fn gens(k: i64, d: usize) -> Vec<MatrixDiffOp> {
        let spec = RepSpec::gl3(d).unwrap();
        let mut b = Bindings::new();
        b.insert(Param::K, rat(k));
        build_gl_np1(&spec).substitute(&b).ops()
    }

    #[test]
    fn scalar_basis_counts() {
        let b = scalar_basis(2, 1).unwrap();
        assert_eq!(b.len(), 6);
        assert_eq!(scalar_basis(0, 3).unwrap().len(), 1);
        let b = scalar_basis(3, 2).unwrap();
        let mut got: Vec<Vec<u32>> = b.vectors().iter().map(|v| v.component(0).terms().next().unwrap().0.clone()).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 0], vec![3, 0]]);
        assert!(b.grades().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn antiquark_space() {
        let seed = PolySpinor::basis(2, 2, 1);
        let b = orbit_closure(&gens(1, 2), &[seed], 4).unwrap();
        assert_eq!(b.len(), 3);
        let y1 = PolySpinor::new(
            2,
            vec![Polynomial::monomial(vec![0, 1], Coeff::int(1)), Polynomial::monomial(vec![1, 0], Coeff::int(-1))],
        );
        assert!(b.contains(&y1).unwrap());
        assert!(b.contains(&PolySpinor::basis(2, 2, 0)).unwrap());
    }

    #[test]
    fn symbolic_generators_are_rejected() {
        let g = build_gl_np1(&RepSpec::gl3(1).unwrap()).ops();
        let r = orbit_closure(&g, &[PolySpinor::basis(1, 2, 0)], 3);
        assert!(matches!(r, Err(Error::UnboundParameter(_))));
    }

    #[test]
    fn non_integer_k_hits_cap() {
        let spec = RepSpec::gl3(1).unwrap();
        let mut b = Bindings::new();
        b.insert(Param::K, crate::scalar::ratio(1, 2));
        let g = build_gl_np1(&spec).substitute(&b).ops();
        let r = orbit_closure(&g, &[PolySpinor::basis(1, 2, 0)], 3);
        assert!(matches!(r, Err(Error::DegreeCapExceeded { cap: 3, .. })));
    }

    #[test]
    fn euler_operator_matrix_on_linear_polynomials() {
        let spec = RepSpec::gl3(1).unwrap();
        let mut b = Bindings::new();
        b.insert(Param::K, rat(1));
        let g = build_gl_np1(&spec).substitute(&b);
        let basis = scalar_basis(1, 1).unwrap();
        let m = matrix_of(g.e0(), &basis).unwrap();
        let want = DenseMatrix::from_fn(3, 3, |i, j| if i == 0 && j == 0 { Coeff::int(1) } else { Coeff::zero() });
        assert_eq!(m.entries, want);
        let t = matrix_of(g.tm(1), &basis).unwrap();
        let nonzero: Vec<(usize, usize)> =
            (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| !t.entries.get(i, j).is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
    }

    #[test]
    fn raising_operator_leaves_polynomial_space() {
        let spec = RepSpec::gl3(1).unwrap();
        let mut b = Bindings::new();
        b.insert(Param::K, rat(2));
        let g = build_gl_np1(&spec).substitute(&b);
        let basis = scalar_basis(1, 1).unwrap();
        assert!(matches!(matrix_of(g.tp(1), &basis), Err(Error::NotInvariant { .. })));
    }

    #[test]
    fn octet_hexagon() {
        let b = orbit_closure(&gens(2, 2), &[PolySpinor::basis(2, 2, 1)], 6).unwrap();
        let w = WeightMap::from_rep(&gl2_irrep(2).unwrap()).unwrap();
        let wb = weight_basis(&b, &w, total_grade).unwrap();
        let r = hexagon_audit(&wb, 2).unwrap();
        assert!(r.pass(), "{r:?}");
        let doubles: Vec<_> = r.points.iter().filter(|p| p.multiplicity == 2).map(|p| p.weight.clone()).collect();
        assert_eq!(doubles, vec![vec![1, 1]]);
    }

    #[test]
    fn convex_hull_of_square_with_centre() {
        let pts = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2], vec![1, 1], vec![1, 0]];
        let h = convex_hull(&pts);
        assert_eq!(h.len(), 4);
        assert!(on_hull_boundary(&h, &[1, 0]));
        assert!(!on_hull_boundary(&h, &[1, 1]));
    }
}
