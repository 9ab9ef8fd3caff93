//! Exact verification suites: commutation tables, Casimir operators, the
//! quadratic relations between `gl3` generators and their grading balance.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::solve_columns;
use crate::reps::{GenName, GeneratorSet};
use crate::scalar::{Coeff, QuadNum};
use crate::weyl::MatrixDiffOp;

/// One checked operator identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: MatrixDiffOp,
    pub rhs: MatrixDiffOp,
    pub residual: MatrixDiffOp,
    pub pass: bool,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, lhs: MatrixDiffOp, rhs: MatrixDiffOp) -> Result<Self> {
        let residual = lhs.try_sub(&rhs)?;
        let pass = residual.is_zero();
        Ok(IdentityReport { name: name.into(), lhs, rhs, residual, pass })
    }

    pub fn summary(&self) -> IdentitySummary {
        IdentitySummary {
            name: self.name.clone(),
            pass: self.pass,
            residual_terms: self.residual.term_count(),
            residual: if self.pass { String::new() } else { self.residual.to_string() },
        }
    }
}

/// Manifest record of an [`IdentityReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentitySummary {
    pub name: String,
    pub pass: bool,
    pub residual_terms: usize,
    pub residual: String,
}

pub fn all_pass(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

fn gl_indices(n: usize) -> Vec<(usize, usize)> {
    (0..=n).flat_map(|a| (0..=n).map(move |b| (a, b))).collect()
}

/// Every bracket `[e_ab, e_cd]` against `δ_bc e_ad − δ_ad e_cb`.
pub fn commutation_table(gens: &GeneratorSet) -> Vec<IdentityReport> {
    let idx = gl_indices(gens.n());
    let pairs: Vec<((usize, usize), (usize, usize))> =
        idx.iter().flat_map(|&p| idx.iter().map(move |&q| (p, q))).collect();
    pairs
        .par_iter()
        .map(|&((a, b), (c, d))| {
            let lhs = gens.basis(a, b).commutator(gens.basis(c, d)).expect("same shape");
            let mut rhs = gens.basis(0, 0).zero_like();
            if b == c {
                rhs = &rhs + gens.basis(a, d);
            }
            if a == d {
                rhs = &rhs - gens.basis(c, b);
            }
            let name = format!("[{}, {}]", GenName::from_gl_index(a, b), GenName::from_gl_index(c, d));
            IdentityReport::new(name, lhs, rhs).expect("same shape")
        })
        .collect()
}

/// `C1 = Σ e_aa`, `C2 = Σ e_ab e_ba`, `C3 = Σ e_ab e_bc e_ca`.
#[derive(Clone, Debug)]
pub struct Casimirs {
    pub c1: MatrixDiffOp,
    pub c2: MatrixDiffOp,
    pub c3: MatrixDiffOp,
}

pub fn casimirs(gens: &GeneratorSet) -> Casimirs {
    let n = gens.n();
    let e = |a: usize, b: usize| gens.basis(a, b);
    let mut c1 = gens.e0().zero_like();
    let mut c2 = c1.clone();
    let mut c3 = c1.clone();
    for a in 0..=n {
        c1 = &c1 + e(a, a);
        for b in 0..=n {
            let ab = e(a, b);
            c2 = &c2 + &(ab * e(b, a));
            for c in 0..=n {
                c3 = &c3 + &(&(ab * e(b, c)) * e(c, a));
            }
        }
    }
    Casimirs { c1, c2, c3 }
}

/// `C1`, `C2`, `C3` of a `gl3` generator set with the closed forms
/// `C1 = k + C1(M)`, `C2 = k(k+2) + C2(M) − C1(M)` and
/// `C3 = −½C1³ + 3/2 C1C2 + 3C2 − 2C1² − 2C1`.
pub fn casimirs_gl3(gens: &GeneratorSet) -> Result<(Casimirs, Vec<IdentityReport>)> {
    if gens.n() != 2 {
        return Err(Error::Invalid("gl3 Casimirs need n = 2".into()));
    }
    let cs = casimirs(gens);
    let rep = &gens.spec().rep;
    let k = gens.spec().k.clone();
    let nv = gens.n();
    let id = gens.identity();
    let c1m = crate::weyl::MatrixDiffOp::from_matrix(nv, rep.dim(), &rep.first_casimir());
    let c2m = crate::weyl::MatrixDiffOp::from_matrix(nv, rep.dim(), &rep.second_casimir());
    let c1_closed = &id.scale(&k) + &c1m;
    let c2_closed = &(&id.scale(&(&k * &(&k + &Coeff::int(2)))) + &c2m) - &c1m;
    let c1 = &cs.c1;
    let c2 = &cs.c2;
    let c1sq = c1 * c1;
    let c3_closed = &(&(&(&(&c1sq * c1).scale(&Coeff::frac(-1, 2)) + &(c1 * c2).scale(&Coeff::frac(3, 2)))
        + &c2.scale(&Coeff::int(3)))
        - &c1sq.scale(&Coeff::int(2)))
        - &c1.scale(&Coeff::int(2));
    let reports = vec![
        IdentityReport::new("C1 = k + C1(M)", cs.c1.clone(), c1_closed)?,
        IdentityReport::new("C2 = k(k+2) + C2(M) - C1(M)", cs.c2.clone(), c2_closed)?,
        IdentityReport::new("C3 = -1/2 C1^3 + 3/2 C1 C2 + 3 C2 - 2 C1^2 - 2 C1", cs.c3.clone(), c3_closed)?,
    ];
    Ok((cs, reports))
}

/// `[C, g] = 0` for each generator `g`.
pub fn casimir_centrality(name: &str, c: &MatrixDiffOp, gens: &GeneratorSet) -> Vec<IdentityReport> {
    let list: Vec<(&GenName, &MatrixDiffOp)> = gens.iter().collect();
    list.par_iter()
        .map(|(g, op)| {
            let lhs = c.commutator(op).expect("same shape");
            let zero = lhs.zero_like();
            IdentityReport::new(format!("[{name}, {g}] = 0"), lhs, zero).expect("same shape")
        })
        .collect()
}

/// Left side of a relation as a sum of signed products of two generators
/// and a shift; used for grading bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticTerm {
    pub sign: i64,
    pub left: GenName,
    pub right: GenName,
}

/// The nine mixed-representation relations. Each entry holds the relation
/// label, the generator products on the left, and both sides as operators.
pub struct ArtRelation {
    pub label: &'static str,
    pub terms: Vec<QuadraticTerm>,
    pub report: IdentityReport,
}

fn q(sign: i64, left: GenName, right: GenName) -> QuadraticTerm {
    QuadraticTerm { sign, left, right }
}

pub fn art_relations(gens: &GeneratorSet) -> Result<Vec<ArtRelation>> {
    if gens.n() != 2 {
        return Err(Error::Invalid("the quadratic relations are stated for n = 2".into()));
    }
    use GenName::*;
    let e = |i, j| gens.e(i, j).clone();
    let e0 = gens.e0().clone();
    let tm = |i| gens.tm(i).clone();
    let tp = |i| gens.tp(i).clone();
    let x = |i| gens.x(i);
    let d = |i| gens.d(i);
    let m = |i, j| gens.m(i, j);
    let c = |v: Coeff| gens.scalar(v);
    let k = gens.spec().k.clone();
    let one = gens.identity();
    let kp1 = c(&k + &Coeff::one());
    let e0p1 = &e0 + &one;

    let lhs = vec![
        &(&tp(2) * &e(1, 2)) - &(&tp(1) * &e(2, 2)),
        &(&tp(1) * &e(2, 1)) - &(&tp(2) * &e(1, 1)),
        &(&tp(1) * &tm(2)) - &(&e(1, 2) * &e0p1),
        &(&tp(2) * &tm(1)) - &(&e(2, 1) * &e0p1),
        &(&tp(1) * &tm(1)) - &(&e(1, 1) * &e0p1),
        &(&tp(2) * &tm(2)) - &(&e(2, 2) * &e0p1),
        &(&(&e(1, 2) * &e(2, 1)) - &(&e(1, 1) * &e(2, 2))) - &e(1, 1),
        &(&e(2, 2) * &tm(1)) - &(&e(2, 1) * &tm(2)),
        &(&e(1, 2) * &tm(1)) - &(&e(1, 1) * &tm(2)),
    ];
    let x1d1 = &x(1) * &d(1);
    let x2d2 = &x(2) * &d(2);
    let rhs = vec![
        &(&(&x(1)
            * &(&(&(&(&m(2, 2) * &x1d1) + &(&m(1, 1) * &x2d2)) + &(&(&m(1, 1) - &c(k.clone())) * &m(2, 2)))
                - &(&m(2, 1) * &m(1, 2))))
            - &(&(&x(2) * &(&x1d1 - &kp1)) * &m(1, 2)))
            - &(&(&m(2, 1) * &(&x(1) * &x(1))) * &d(2)),
        &(&(&x(2)
            * &(&(&(&(&m(2, 2) * &x1d1) + &(&m(1, 1) * &x2d2)) + &(&(&m(2, 2) - &c(k.clone())) * &m(1, 1)))
                - &(&m(1, 2) * &m(2, 1))))
            - &(&(&x(1) * &(&x2d2 - &kp1)) * &m(2, 1)))
            - &(&(&m(1, 2) * &(&x(2) * &x(2))) * &d(1)),
        &(&m(1, 2) * &(&x1d1 - &kp1)) - &(&m(1, 1) * &(&x(1) * &d(2))),
        &(&m(2, 1) * &(&x2d2 - &kp1)) - &(&m(2, 2) * &(&x(2) * &d(1))),
        &(&(&m(1, 1) * &x2d2) - &(&m(1, 2) * &(&x(2) * &d(1)))) - &(&kp1 * &m(1, 1)),
        &(&(&m(2, 2) * &x1d1) - &(&m(2, 1) * &(&x(1) * &d(2)))) - &(&kp1 * &m(2, 2)),
        &(&(&(&(&(&(&m(1, 2) * &(&x(2) * &d(1))) + &(&m(2, 1) * &(&x(1) * &d(2)))) - &(&m(2, 2) * &x1d1))
            - &(&m(1, 1) * &x2d2))
            + &(&m(1, 2) * &m(2, 1)))
            - &(&m(1, 1) * &m(2, 2)))
            - &m(1, 1),
        &(&m(2, 2) * &d(1)) - &(&m(2, 1) * &d(2)),
        &(&m(1, 2) * &d(1)) - &(&m(1, 1) * &d(2)),
    ];
    let terms = vec![
        vec![q(-1, TPlus(1), E(2, 2)), q(1, TPlus(2), E(1, 2))],
        vec![q(-1, TPlus(2), E(1, 1)), q(1, TPlus(1), E(2, 1))],
        vec![q(-1, E(1, 2), E0), q(1, TPlus(1), TMinus(2))],
        vec![q(-1, E(2, 1), E0), q(1, TPlus(2), TMinus(1))],
        vec![q(1, TPlus(1), TMinus(1)), q(-1, E(1, 1), E0)],
        vec![q(1, TPlus(2), TMinus(2)), q(-1, E(2, 2), E0)],
        vec![q(1, E(1, 2), E(2, 1)), q(-1, E(1, 1), E(2, 2))],
        vec![q(1, E(2, 2), TMinus(1)), q(-1, E(2, 1), TMinus(2))],
        vec![q(1, E(1, 2), TMinus(1)), q(-1, E(1, 1), TMinus(2))],
    ];
    const LABELS: [&str; 9] = ["Art.1", "Art.2", "Art.3", "Art.4", "Art.5", "Art.6", "Art.7", "Art.8", "Art.9"];
    let out: Vec<ArtRelation> = lhs
        .into_iter()
        .zip(rhs)
        .zip(terms)
        .enumerate()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, ((l, r), t))| {
            let report = IdentityReport::new(LABELS[i], l, r).expect("same shape");
            ArtRelation { label: LABELS[i], terms: t, report }
        })
        .collect();
    Ok(out)
}

/// Exact coefficients of `C2 = a5 L5 + a6 L6 + a7 L7 + p0 + p1 C1 + p2 C1²`,
/// where `L5, L6, L7` are the left sides of Art.5–Art.7, solved jointly
/// over several representations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArtDependency {
    pub dims: Vec<usize>,
    pub unknowns: Vec<&'static str>,
    /// `None` if no such combination exists.
    pub solution: Option<Vec<QuadNum>>,
    /// Dimension of the space of solutions of the homogeneous system.
    pub nullity: usize,
    /// Basis of that space.
    pub nullspace: Vec<Vec<QuadNum>>,
}

impl ArtDependency {
    /// Whether `v` solves the system.
    pub fn admits(&self, v: &[QuadNum]) -> bool {
        let Some(p) = &self.solution else { return false };
        let sparse = |w: &[QuadNum]| -> BTreeMap<usize, QuadNum> {
            w.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
        };
        let diff: Vec<QuadNum> = v.iter().zip(p).map(|(a, b)| a.clone() - b.clone()).collect();
        let columns: Vec<_> = self.nullspace.iter().map(|n| sparse(n)).collect();
        solve_columns(&columns, &sparse(&diff)).particular.is_some()
    }
}

pub const ART_DEPENDENCY_UNKNOWNS: [&str; 6] = ["a5", "a6", "a7", "p0", "p1", "p2"];

pub fn art_dependency(sets: &[GeneratorSet]) -> Result<ArtDependency> {
    let mut columns: Vec<BTreeMap<(usize, crate::weyl::OpKey), QuadNum>> = vec![BTreeMap::new(); 6];
    let mut target = BTreeMap::new();
    for (tag, gens) in sets.iter().enumerate() {
        let relations = art_relations(gens)?;
        let (cs, _) = casimirs_gl3(gens)?;
        let l = |label: &str| {
            relations
                .iter()
                .find(|r| r.label == label)
                .map(|r| r.report.lhs.clone())
                .ok_or_else(|| Error::Invalid(format!("missing {label}")))
        };
        let cols = [l("Art.5")?, l("Art.6")?, l("Art.7")?, gens.identity(), cs.c1.clone(), &cs.c1 * &cs.c1];
        for (j, c) in cols.iter().enumerate() {
            columns[j].extend(c.coordinates().into_iter().map(|(k, v)| ((tag, k), v)));
        }
        target.extend(cs.c2.coordinates().into_iter().map(|(k, v)| ((tag, k), v)));
    }
    let sol = solve_columns(&columns, &target);
    Ok(ArtDependency {
        dims: sets.iter().map(|g| g.dim()).collect(),
        unknowns: ART_DEPENDENCY_UNKNOWNS.to_vec(),
        solution: sol.particular,
        nullity: sol.nullspace.len(),
        nullspace: sol.nullspace,
    })
}

/// Reference grading decomposition of one relation: the grades of the two
/// factors in each of its two terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingLine {
    pub label: &'static str,
    pub reference: [[[i64; 2]; 2]; 2],
    pub computed: [[[i64; 2]; 2]; 2],
    /// Reference factors agree with the computed generator grades.
    pub factors_match: bool,
    /// Both reference sides have the same total grade.
    pub reference_balanced: bool,
    /// Both computed sides have the same total grade.
    pub computed_balanced: bool,
}

impl GradingLine {
    pub fn pass(&self) -> bool {
        self.factors_match && self.reference_balanced && self.computed_balanced
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub generator_grades: BTreeMap<String, Vec<i64>>,
    pub lines: Vec<GradingLine>,
}

impl GradingReport {
    pub fn pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass())
    }
}

/// Reference factor grades of the relations; for Art.9 the two
/// sides are listed in the order (second term, first term).
pub const REFERENCE_GRADINGS: [[[[i64; 2]; 2]; 2]; 9] = [
    [[[1, 0], [0, 0]], [[0, 1], [1, -1]]],
    [[[0, 1], [0, 0]], [[1, 0], [-1, 0]]],
    [[[1, -1], [0, 0]], [[1, 0], [0, -1]]],
    [[[-1, 1], [0, 0]], [[0, 1], [-1, 0]]],
    [[[1, 0], [-1, 0]], [[0, 0], [0, 0]]],
    [[[0, 1], [0, -1]], [[0, 0], [0, 0]]],
    [[[1, -1], [-1, 1]], [[0, 0], [0, 0]]],
    [[[0, 0], [-1, 0]], [[-1, 1], [0, -1]]],
    [[[0, 0], [0, -1]], [[1, -1], [-1, 0]]],
];

fn grade2(op: &MatrixDiffOp) -> Result<[i64; 2]> {
    let g = op.grade().ok_or_else(|| Error::Invalid(format!("operator {op} is not homogeneous")))?;
    Ok([g[0], g[1]])
}

fn sum2(a: [[i64; 2]; 2]) -> [i64; 2] {
    [a[0][0] + a[1][0], a[0][1] + a[1][1]]
}

/// Vector grading of the scalar generators and the balance of each reference
/// decomposition; only meaningful for the scalar block.
pub fn grading_audit(gens: &GeneratorSet, relations: &[ArtRelation]) -> Result<GradingReport> {
    if gens.dim() != 1 {
        return Err(Error::Invalid("grading audit needs the scalar block".into()));
    }
    let mut generator_grades = BTreeMap::new();
    let mut grade_of = BTreeMap::new();
    for (name, op) in gens.iter() {
        let g = grade2(op)?;
        generator_grades.insert(name.to_string(), g.to_vec());
        grade_of.insert(*name, g);
    }
    let mut lines = Vec::new();
    for (i, rel) in relations.iter().enumerate() {
        let reference = REFERENCE_GRADINGS[i];
        let t = &rel.terms;
        let pair = |j: usize| [grade_of[&t[j].left], grade_of[&t[j].right]];
        let computed = if i == 8 { [pair(1), pair(0)] } else { [pair(0), pair(1)] };
        lines.push(GradingLine {
            label: rel.label,
            reference,
            computed,
            factors_match: reference == computed,
            reference_balanced: sum2(reference[0]) == sum2(reference[1]),
            computed_balanced: sum2(computed[0]) == sum2(computed[1]),
        });
    }
    Ok(GradingReport { generator_grades, lines })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{build_gl_np1, RepSpec};

    fn gens(d: usize) -> GeneratorSet {
        build_gl_np1(&RepSpec::gl3(d).unwrap())
    }

    #[test]
    fn table_closes_for_small_blocks() {
        for d in 1..=3 {
            let t = commutation_table(&gens(d));
            assert_eq!(t.len(), 81);
            let bad: Vec<_> = t.iter().filter(|r| !r.pass).map(|r| r.name.clone()).collect();
            assert!(bad.is_empty(), "d={d}: {bad:?}");
        }
    }

    #[test]
    fn mixed_bracket_off_diagonal() {
        let g = gens(2);
        let lhs = g.tp(1).commutator(g.tm(2)).unwrap();
        assert_eq!(lhs, *g.e(1, 2));
        let diag = g.tp(1).commutator(g.tm(1)).unwrap();
        assert_eq!(diag, g.e(1, 1) - g.e0());
    }

    #[test]
    fn scalar_casimirs() {
        let (cs, reports) = casimirs_gl3(&gens(1)).unwrap();
        assert_eq!(cs.c1.as_scalar_multiple_of_identity(), Some(Coeff::k()));
        let k = Coeff::k();
        assert_eq!(cs.c2.as_scalar_multiple_of_identity(), Some(&k * &(&k + &Coeff::int(2))));
        assert!(reports[0].pass && reports[1].pass);
    }

    #[test]
    fn dropping_a_term_breaks_centrality() {
        let g = gens(2);
        let (cs, _) = casimirs_gl3(&g).unwrap();
        assert!(all_pass(&casimir_centrality("C2", &cs.c2, &g)));
        let broken = &cs.c2 - &(g.e(1, 2) * g.e(2, 1));
        let r = casimir_centrality("C2'", &broken, &g);
        assert!(!all_pass(&r));
    }

    #[test]
    fn lowering_relations_at_d2() {
        let rels = art_relations(&gens(2)).unwrap();
        assert!(rels[7].report.pass);
        assert!(rels[8].report.pass);
    }
}
