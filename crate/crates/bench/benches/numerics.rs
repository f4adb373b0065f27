use std::hint::black_box;

use alphasun_bench::{params, x_grid, POINTS};
use alphasun_core::bounds::bound_report;
use alphasun_core::density::{density_mellin_barnes, density_second_order, simon_constant, MbOptions};
use alphasun_core::sequences::{d_from_t, f_from_divisors, f_ppe_recursive, t_recurrence, t_table};
use alphasun_core::specfun::{gamma_fn, gauss_2f1, lambert_w0};
use alphasun_core::Precision;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

fn specfun(c: &mut Criterion) {
    let prec = Precision::default();
    c.bench_function("gamma_fn complex", |b| b.iter(|| gamma_fn(black_box(Complex64::new(2.3, -4.1)))));
    c.bench_function("gauss_2f1 j=20", |b| {
        b.iter(|| gauss_2f1(black_box(1.5), 30.0, 31.0, black_box(0.7), &prec))
    });
    c.bench_function("lambert_w0", |b| b.iter(|| lambert_w0(black_box(123.4))));
}

fn sequences(c: &mut Criterion) {
    let mut g = c.benchmark_group("sequences");
    for (i, pt) in POINTS.iter().enumerate() {
        let q = params(i);
        let id = format!("{pt:?}");
        g.bench_with_input(BenchmarkId::new("t_table 200", &id), &q, |b, q| b.iter(|| t_table(q, 200)));
        g.bench_with_input(BenchmarkId::new("t_recurrence 20", &id), &q, |b, q| b.iter(|| t_recurrence(q, 20)));
        g.bench_with_input(BenchmarkId::new("f divisors 200", &id), &q, |b, q| {
            b.iter(|| f_from_divisors(&d_from_t(&t_table(q, 200)).unwrap(), 200))
        });
        g.bench_with_input(BenchmarkId::new("f recursive 30", &id), &q, |b, q| b.iter(|| f_ppe_recursive(q, 30)));
    }
    g.finish();
}

fn bounds(c: &mut Criterion) {
    let prec = Precision::default();
    let q = params(1);
    c.bench_function("bound_report n=40", |b| b.iter(|| bound_report(&q, black_box(40), &prec)));
}

fn density(c: &mut Criterion) {
    let q = params(0);
    let mut g = c.benchmark_group("density");
    g.sample_size(10);
    g.bench_function("simon_constant K=1e4", |b| b.iter(|| simon_constant(&q, 10_000)));
    let xs = x_grid(0.2, 3.0, 50);
    g.bench_function("second order, 50 points", |b| {
        b.iter(|| xs.iter().map(|&x| density_second_order(&q, x).unwrap()).sum::<f64>())
    });
    let opts = MbOptions::default();
    g.bench_function("contour density x=1", |b| b.iter(|| density_mellin_barnes(&q, black_box(1.0), &opts)));
    g.finish();
}

criterion_group!(benches, specfun, sequences, bounds, density);
criterion_main!(benches);
