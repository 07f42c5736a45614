use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use seidel_core::{
    bell_number, bell_polynomial, check_all_with, run_series_checks, EsMatrix, Fixtures,
    IntPolynomial, PolySeries,
};

fn matrices(c: &mut Criterion) {
    let mut group = c.benchmark_group("esmatrix");
    for size in [16, 64, 128] {
        let bells: Vec<_> = (0..size).map(bell_number).collect();
        group.bench_with_input(BenchmarkId::new("bell", size), &bells, |b, init| {
            b.iter(|| EsMatrix::build(black_box(init.clone())).unwrap())
        });
    }
    let polys: Vec<_> = (0..24).map(bell_polynomial).collect();
    group.bench_function("bellpoly/24", |b| {
        b.iter(|| EsMatrix::build(black_box(polys.clone())).unwrap())
    });
    group.finish();
}

fn identities(c: &mut Criterion) {
    let mut group = c.benchmark_group("identities");
    group.sample_size(10);
    for max_n in [20, 40] {
        let fx = Fixtures::new(max_n);
        group.bench_with_input(BenchmarkId::new("check_all", max_n), &fx, |b, fx| {
            b.iter(|| check_all_with(fx, max_n).unwrap())
        });
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    group.sample_size(10);
    // x(e^t - 1); its exponential generates the Bell polynomials.
    let mut slots = vec![IntPolynomial::x(); 33];
    slots[0] = IntPolynomial::zero();
    let inner = PolySeries::from_slots(slots, 32);
    group.bench_function("bell_exp/32", |b| {
        b.iter(|| black_box(&inner).exp().unwrap())
    });
    group.bench_function("run_series_checks/16", |b| {
        b.iter(|| run_series_checks(black_box(16)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, matrices, identities, series);
criterion_main!(benches);
