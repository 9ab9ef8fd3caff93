use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use glmix::models::{build, spectrum, ModelForm, ModelKind, NReading};
use glmix::reps::{build_gm, GlMatrixRep};
use glmix::repspace::{gl3_space, total_grade};
use glmix::roots::{roots, UPoly};
use glmix::verify::{art_relations, casimirs_gl3, commutation_table};
use glmix::{Coeff, QuadNum};
use glmix_bench::{gl3_generators, unit_bindings};

fn operators(c: &mut Criterion) {
    let g = gl3_generators(3);
    c.bench_function("compose T1+ T2+ (d=3)", |b| b.iter(|| black_box(g.tp(1) * g.tp(2))));
    c.bench_function("commutation table (d=3)", |b| b.iter(|| commutation_table(black_box(&g))));
    c.bench_function("casimirs with closed forms (d=3)", |b| b.iter(|| casimirs_gl3(black_box(&g)).unwrap()));
    c.bench_function("Art relations (d=3)", |b| b.iter(|| art_relations(black_box(&g)).unwrap()));
}

fn spaces(c: &mut Criterion) {
    c.bench_function("orbit closure [4,1]", |b| b.iter(|| gl3_space(black_box(4), 2, total_grade).unwrap()));
    c.bench_function("g(2) generators", |b| b.iter(|| build_gm(2, Coeff::k(), &GlMatrixRep::trivial(2)).unwrap()));
}

fn spectra(c: &mut Criterion) {
    let b = unit_bindings();
    let cal = build(ModelKind::Calogero, ModelForm::LieAlgebraic, 2, NReading::YoungLabel).unwrap();
    let suth = build(ModelKind::Sutherland, ModelForm::LieAlgebraic, 3, NReading::YoungLabel).unwrap();
    c.bench_function("calogero spectrum k=3 d=2", |bn| bn.iter(|| spectrum(&cal, 3, &b).unwrap()));
    c.bench_function("sutherland spectrum k=3 d=3", |bn| bn.iter(|| spectrum(&suth, 3, &b).unwrap()));
    // (x^2 - 2)(x - 1/3)(x^2 + 1)
    let poly = UPoly::new(vec![QuadNum::int(-2), QuadNum::int(0), QuadNum::int(1)])
        .mul(&UPoly::new(vec![QuadNum::frac(-1, 3), QuadNum::int(1)]))
        .mul(&UPoly::new(vec![QuadNum::int(1), QuadNum::int(0), QuadNum::int(1)]));
    c.bench_function("roots of a quintic", |bn| bn.iter(|| roots(black_box(&poly))));
}

criterion_group!(benches, operators, spaces, spectra);
criterion_main!(benches);
