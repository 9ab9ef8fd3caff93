//! Exact linear algebra over ℚ(√2): an incremental sparse reduced row
//! echelon form used for spans, coordinates and linear solves, and a small
//! dense matrix type with a division-free characteristic polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{Coeff, Field, QuadNum, Ring};

/// Values that can be reduced against ℚ(√2) row vectors.
pub trait Module: Clone + PartialEq {
    fn is_zero_value(&self) -> bool;
    fn scaled(&self, s: &QuadNum) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn plus(&self, o: &Self) -> Self;
}

impl Module for QuadNum {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn scaled(&self, s: &QuadNum) -> Self {
        self * s
    }
    fn minus(&self, o: &Self) -> Self {
        self.clone() - o.clone()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
}

impl Module for Coeff {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn scaled(&self, s: &QuadNum) -> Self {
        self.scale(s)
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
}

pub type SparseVec<K> = BTreeMap<K, QuadNum>;

/// Outcome of [`SparseEchelon::insert`].
#[derive(Clone, Debug, PartialEq)]
pub enum Insertion {
    /// The vector was independent and is stored as accepted input `index`.
    Independent(usize),
    /// The vector equals the given combination of accepted inputs.
    Dependent(BTreeMap<usize, QuadNum>),
}

#[derive(Clone, Debug)]
struct Row<K> {
    pivot: K,
    values: SparseVec<K>,
    /// Expression of this row through accepted inputs.
    combo: BTreeMap<usize, QuadNum>,
}

/// Reduced row echelon basis that grows one vector at a time and remembers
/// how each row was formed from the accepted inputs.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: Vec<Row<K>>,
    pivots: BTreeMap<K, usize>,
    accepted: usize,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon { rows: Vec::new(), pivots: BTreeMap::new(), accepted: 0 }
    }
}

fn axpy<K: Ord + Clone, V: Module>(target: &mut BTreeMap<K, V>, row: &SparseVec<K>, lambda: &V, zero: &V) {
    for (k, rv) in row {
        let delta = lambda.scaled(rv);
        match target.get_mut(k) {
            Some(t) => {
                *t = t.minus(&delta);
                if t.is_zero_value() {
                    target.remove(k);
                }
            }
            None => {
                let v = zero.minus(&delta);
                if !v.is_zero_value() {
                    target.insert(k.clone(), v);
                }
            }
        }
    }
}

fn combo_axpy(target: &mut BTreeMap<usize, QuadNum>, src: &BTreeMap<usize, QuadNum>, lambda: &QuadNum) {
    axpy(target, src, lambda, &QuadNum::zero());
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.pivots.keys()
    }

    /// Reduces `v` against the stored rows; returns the residual and the
    /// coefficients (over accepted inputs) of the removed part.
    pub fn reduce<V: Module>(&self, v: &BTreeMap<K, V>, zero: &V) -> (BTreeMap<K, V>, BTreeMap<usize, V>) {
        let mut res = v.clone();
        let mut lambdas: Vec<(usize, V)> = Vec::new();
        for (pivot, &ri) in &self.pivots {
            let lambda = match res.get(pivot) {
                Some(l) => l.clone(),
                None => continue,
            };
            axpy(&mut res, &self.rows[ri].values, &lambda, zero);
            lambdas.push((ri, lambda));
        }
        let mut coords: BTreeMap<usize, V> = BTreeMap::new();
        for (ri, lambda) in lambdas {
            for (idx, c) in &self.rows[ri].combo {
                let add = lambda.scaled(c);
                let e = coords.entry(*idx).or_insert_with(|| zero.clone());
                *e = e.plus(&add);
            }
        }
        coords.retain(|_, v| !v.is_zero_value());
        (res, coords)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v, &QuadNum::zero()).0.is_empty()
    }

    pub fn insert(&mut self, v: &SparseVec<K>) -> Insertion {
        let (res, coords) = self.reduce(v, &QuadNum::zero());
        if res.is_empty() {
            return Insertion::Dependent(coords);
        }
        let index = self.accepted;
        self.accepted += 1;
        let (pivot, pv) = res.iter().next().map(|(k, v)| (k.clone(), v.clone())).unwrap();
        let inv = pv.try_inv().expect("non-zero pivot");
        let values: SparseVec<K> = res.iter().map(|(k, x)| (k.clone(), x * &inv)).collect();
        // combo = (e_index − coords) / pivot
        let mut combo: BTreeMap<usize, QuadNum> = coords.iter().map(|(i, c)| (*i, -(c * &inv))).collect();
        combo.insert(index, inv.clone());
        combo.retain(|_, c| !c.is_zero());
        for row in &mut self.rows {
            if let Some(l) = row.values.get(&pivot).cloned() {
                axpy(&mut row.values, &values, &l, &QuadNum::zero());
                combo_axpy(&mut row.combo, &combo, &l);
            }
        }
        self.pivots.insert(pivot.clone(), self.rows.len());
        self.rows.push(Row { pivot, values, combo });
        Insertion::Independent(index)
    }

    /// Accepted count so far (equals the rank).
    pub fn accepted(&self) -> usize {
        self.accepted
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = (&K, &SparseVec<K>)> {
        self.rows.iter().map(|r| (&r.pivot, &r.values))
    }
}

/// Rank of the span of `vs`.
pub fn span_rank<'a, K: Ord + Clone + 'a>(vs: impl IntoIterator<Item = &'a SparseVec<K>>) -> usize {
    let mut e = SparseEchelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// Ranks of `span(a)`, `span(b)` and `span(a ∪ b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanComparison {
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_union: usize,
}

impl SpanComparison {
    pub fn equal(&self) -> bool {
        self.rank_a == self.rank_union && self.rank_b == self.rank_union
    }

    /// `span(a) ⊆ span(b)`.
    pub fn a_in_b(&self) -> bool {
        self.rank_b == self.rank_union
    }
}

pub fn compare_spans<K: Ord + Clone>(a: &[SparseVec<K>], b: &[SparseVec<K>]) -> SpanComparison {
    SpanComparison {
        rank_a: span_rank(a),
        rank_b: span_rank(b),
        rank_union: span_rank(a.iter().chain(b)),
    }
}

/// Result of solving `Σ u_j · columns[j] = target`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolution {
    /// One particular solution (free unknowns set to zero); `None` if the
    /// system is inconsistent.
    pub particular: Option<Vec<QuadNum>>,
    pub rank: usize,
    /// Basis of the solution space of the homogeneous system.
    pub nullspace: Vec<Vec<QuadNum>>,
}

pub fn solve_columns<K: Ord + Clone>(columns: &[SparseVec<K>], target: &SparseVec<K>) -> LinearSolution {
    let mut ech = SparseEchelon::new();
    let mut accepted_col = Vec::new();
    let mut dependents = Vec::new();
    for (j, c) in columns.iter().enumerate() {
        match ech.insert(c) {
            Insertion::Independent(_) => accepted_col.push(j),
            Insertion::Dependent(combo) => dependents.push((j, combo)),
        }
    }
    let n = columns.len();
    let nullspace = dependents
        .into_iter()
        .map(|(j, combo)| {
            let mut v = vec![QuadNum::zero(); n];
            v[j] = QuadNum::one();
            for (idx, c) in combo {
                v[accepted_col[idx]] = -c;
            }
            v
        })
        .collect();
    let (res, coords) = ech.reduce(target, &QuadNum::zero());
    let particular = res.is_empty().then(|| {
        let mut v = vec![QuadNum::zero(); n];
        for (idx, c) in coords {
            v[accepted_col[idx]] = c;
        }
        v
    });
    LinearSolution { particular, rank: ech.rank(), nullspace }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Ring> DenseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        DenseMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> DenseMatrix<G> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, o: &DenseMatrix<F>) -> DenseMatrix<F> {
        assert_eq!(self.cols, o.rows, "inner dimension");
        DenseMatrix::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(F::zero(), |acc, l| acc + self.get(i, l).clone() * o.get(l, j).clone())
        })
    }

    /// Principal submatrix on the given index set.
    pub fn principal(&self, idx: &[usize]) -> DenseMatrix<F> {
        DenseMatrix::from_fn(idx.len(), idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Coefficients of `det(t·1 − A)`, lowest degree first, by Berkowitz's
    /// division-free recursion.
    pub fn charpoly(&self) -> Vec<F> {
        assert_eq!(self.rows, self.cols, "square matrix");
        let n = self.rows;
        // highest degree first while iterating
        let mut v: Vec<F> = vec![F::one()];
        for r in 0..n {
            let a = self.get(r, r).clone();
            // column C = A[0..r][r], row R = A[r][0..r], S = A[0..r][0..r]
            let mut t: Vec<F> = Vec::with_capacity(r + 2);
            t.push(F::one());
            t.push(-a);
            let mut sc: Vec<F> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let rc = (0..r).fold(F::zero(), |acc, j| acc + self.get(r, j).clone() * sc[j].clone());
                t.push(-rc);
                sc = (0..r)
                    .map(|i| (0..r).fold(F::zero(), |acc, j| acc + self.get(i, j).clone() * sc[j].clone()))
                    .collect();
            }
            let mut nv = Vec::with_capacity(r + 2);
            for i in 0..r + 2 {
                let mut acc = F::zero();
                for j in 0..=r {
                    if i >= j && i - j < t.len() {
                        acc = acc + t[i - j].clone() * v[j].clone();
                    }
                }
                nv.push(acc);
            }
            v = nv;
        }
        v.reverse();
        v
    }
}

impl<F: Ring + fmt::Display> fmt::Display for DenseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn q(n: i64) -> QuadNum {
        QuadNum::int(n)
    }

    fn sv(pairs: &[(u32, i64)]) -> SparseVec<u32> {
        pairs.iter().map(|&(k, v)| (k, q(v))).collect()
    }

    #[test]
    fn echelon_rank_and_coordinates() {
        let mut e = SparseEchelon::new();
        assert_eq!(e.insert(&sv(&[(0, 1), (1, 2)])), Insertion::Independent(0));
        assert_eq!(e.insert(&sv(&[(1, 1), (2, 1)])), Insertion::Independent(1));
        // 2·v0 − 3·v1
        let target = sv(&[(0, 2), (1, 1), (2, -3)]);
        match e.insert(&target) {
            Insertion::Dependent(c) => {
                assert_eq!(c.get(&0), Some(&q(2)));
                assert_eq!(c.get(&1), Some(&q(-3)));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(e.rank(), 2);
        assert!(!e.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn solve_with_free_unknown() {
        let cols = vec![sv(&[(0, 1)]), sv(&[(0, 2)]), sv(&[(1, 1)])];
        let s = solve_columns(&cols, &sv(&[(0, 4), (1, 5)]));
        assert_eq!(s.rank, 2);
        assert_eq!(s.particular, Some(vec![q(4), q(0), q(5)]));
        assert_eq!(s.nullspace, vec![vec![q(-2), q(1), q(0)]]);
        assert!(solve_columns(&cols, &sv(&[(3, 1)])).particular.is_none());
    }

    /// Leibniz expansion of det(t·1 − A) with polynomial arithmetic; an
    /// oracle independent of the Berkowitz recursion.
    fn charpoly_leibniz(a: &DenseMatrix<Rational>) -> Vec<Rational> {
        fn pmul(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
            let mut r = vec![Rational::zero(); p.len() + q.len() - 1];
            for (i, x) in p.iter().enumerate() {
                for (j, y) in q.iter().enumerate() {
                    r[i + j] += x * y;
                }
            }
            r
        }
        let n = a.rows();
        let mut total = vec![Rational::zero(); n + 1];
        let mut perm: Vec<usize> = (0..n).collect();
        fn permutations(k: usize, perm: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i32)>, sign: i32) {
            if k == perm.len() {
                out.push((perm.clone(), sign));
                return;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                permutations(k + 1, perm, out, if i == k { sign } else { -sign });
                perm.swap(k, i);
            }
        }
        let mut all = Vec::new();
        permutations(0, &mut perm, &mut all, 1);
        for (p, s) in all {
            let mut prod = vec![rat(1)];
            for i in 0..n {
                let entry = if p[i] == i {
                    vec![-a.get(i, i).clone(), rat(1)]
                } else {
                    vec![-a.get(i, p[i]).clone()]
                };
                prod = pmul(&prod, &entry);
            }
            for (d, c) in prod.into_iter().enumerate() {
                total[d] += c * rat(s as i64);
            }
        }
        total
    }

    #[test]
    fn berkowitz_matches_leibniz() {
        let samples = [
            vec![vec![2, 1, 0], vec![-1, 3, 4], vec![5, 0, -2]],
            vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-6, 11, -6, 1]],
            vec![vec![7]],
        ];
        for s in samples {
            let m = DenseMatrix::from_rows(s.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect());
            assert_eq!(m.charpoly(), charpoly_leibniz(&m));
        }
    }
}
