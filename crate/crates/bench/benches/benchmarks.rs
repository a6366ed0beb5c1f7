use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use qtriangles::distributions::{compare_envelopes, distribution, estimate_exponent};
use qtriangles::trajectories::{link_reports, WalkSystem};
use qtriangles::triangles::{nonlinear_row, pascal_row};
use qtriangles::words::{histogram, IndexKind};
use qtriangles::TriangleKind;

fn bench_rows(c: &mut Criterion) {
    let mut group = c.benchmark_group("rows");
    group.bench_function("pascal_210", |b| b.iter(|| pascal_row(black_box(210))));
    group.bench_function("nonlinear_210", |b| b.iter(|| nonlinear_row(black_box(210))));
    group.finish();
}

fn bench_histograms(c: &mut Criterion) {
    let mut group = c.benchmark_group("histograms");
    group.bench_function("p_20", |b| {
        b.iter(|| histogram(black_box(20), IndexKind::P).unwrap())
    });
    group.bench_function("q_20", |b| {
        b.iter(|| histogram(black_box(20), IndexKind::Q).unwrap())
    });
    group.finish();
}

fn bench_trajectories(c: &mut Criterion) {
    c.bench_function("link_reports_q_12", |b| {
        b.iter(|| link_reports(black_box(12), WalkSystem::IntegratedWalk).unwrap())
    });
}

fn bench_distributions(c: &mut Criterion) {
    let mut group = c.benchmark_group("distributions");
    group.bench_function("summary_nonlinear_210", |b| {
        b.iter(|| distribution(TriangleKind::Nonlinear, black_box(210)))
    });
    group.bench_function("exponent_nonlinear_210", |b| {
        b.iter(|| estimate_exponent(TriangleKind::Nonlinear, black_box(210)))
    });
    group.bench_function("compare_envelopes_210", |b| {
        b.iter(|| compare_envelopes(black_box(210)))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_rows,
    bench_histograms,
    bench_trajectories,
    bench_distributions
);
criterion_main!(benches);
