//! Timings for the stages of the e6(-14) pipeline.

use criterion::{criterion_group, criterion_main, Criterion};
use lieklein_core::autgrp::{diagram_automorphism, AutoMap};
use lieklein_core::casebook::{realize_case_study, x4};
use lieklein_core::crit::{is_nilpotent, projection_witness, single_involution_check};
use lieklein_core::fixpoint::{fixed_subalgebra, reductive_decompose};
use lieklein_core::realform::{noncompact_root_split, real_fixed_form, BetaConvention};
use lieklein_core::{build_chevalley, ChevalleyAlgebra};

fn e6() -> ChevalleyAlgebra {
    build_chevalley("E6".parse().unwrap()).unwrap()
}

fn omega(alg: &ChevalleyAlgebra) -> AutoMap {
    diagram_automorphism(alg, &alg.rs.diagram_involution().unwrap()).unwrap()
}

fn algebra(c: &mut Criterion) {
    c.bench_function("build_chevalley E6", |b| b.iter(e6));
    let alg = e6();
    c.bench_function("jacobi_check E6", |b| b.iter(|| alg.jacobi_check().unwrap()));
}

fn fixed_points(c: &mut Criterion) {
    let alg = e6();
    let w = omega(&alg);
    let t = x4(&alg).unwrap();
    c.bench_function("fixed subalgebra and type of omega", |b| {
        b.iter(|| reductive_decompose(&alg, &fixed_subalgebra(&alg, &[&w]).unwrap()).unwrap().complex_type())
    });
    c.bench_function("real form of <x4, omega>", |b| b.iter(|| real_fixed_form(&alg, &t, &[&w]).unwrap()));
    c.bench_function("noncompact root split of x4", |b| b.iter(|| noncompact_root_split(&alg, &t).unwrap()));
}

fn criteria(c: &mut Criterion) {
    let r = realize_case_study().unwrap();
    c.bench_function("single-involution check", |b| b.iter(|| single_involution_check(&r.alg, &r.x4, &r.data, &r.x1, BetaConvention::Plus).unwrap()));
    c.bench_function("projection witness", |b| b.iter(|| projection_witness(&r.alg, &r.x4, &r.x0, &r.x1, &r.data, BetaConvention::Plus).unwrap()));
    let mut x = vec![lieklein_core::Q::from_integer(0.into()); r.alg.dim()];
    x[r.alg.e(0)] = lieklein_core::Q::from_integer(1.into());
    c.bench_function("is_nilpotent on a root vector", |b| b.iter(|| is_nilpotent(&r.alg, &x)));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = algebra, fixed_points, criteria
}
criterion_main!(benches);
