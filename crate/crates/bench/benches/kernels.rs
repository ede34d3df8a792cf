use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use trioid_core::census::{canonical_form, enumerate_trioids, StructureClass};
use trioid_core::laws::verify_theta_lemma;
use trioid_core::rack::{check_three_rack, derive_three_rack};
use trioid_core::{check_trisemigroup, fixtures};

fn axiom_scan(c: &mut Criterion) {
    let (m18, _) = fixtures::m18();
    c.bench_function("trisemigroup_check_m18", |b| {
        b.iter(|| black_box(check_trisemigroup(black_box(&m18))))
    });
}

fn rack_kernels(c: &mut Criterion) {
    let (t6, cert6) = fixtures::t6();
    c.bench_function("derive_rack_t6", |b| {
        b.iter(|| black_box(derive_three_rack(black_box(&t6), &cert6).unwrap()))
    });

    let (m18, cert18) = fixtures::m18();
    let rack = derive_three_rack(&m18, &cert18).unwrap();
    let mut group = c.benchmark_group("rack_check");
    group.sample_size(20);
    group.bench_function("m18_quintic_scan", |b| {
        b.iter(|| black_box(check_three_rack(black_box(&rack))))
    });
    group.finish();
}

fn law_kernels(c: &mut Criterion) {
    let (t6, cert) = fixtures::t6();
    c.bench_function("theta_lemma_t6", |b| {
        b.iter(|| black_box(verify_theta_lemma(black_box(&t6), &cert)))
    });
}

fn census_kernels(c: &mut Criterion) {
    let (t6, _) = fixtures::t6();
    c.bench_function("canonical_form_t6", |b| {
        b.iter(|| black_box(canonical_form(black_box(&t6)).unwrap()))
    });
    let mut group = c.benchmark_group("census");
    group.sample_size(20);
    group.bench_function("order2_trisemigroups", |b| {
        b.iter(|| black_box(enumerate_trioids(2, StructureClass::Trisemigroup, true).unwrap()))
    });
    group.finish();
}

criterion_group!(
    benches,
    axiom_scan,
    rack_kernels,
    law_kernels,
    census_kernels
);
criterion_main!(benches);
