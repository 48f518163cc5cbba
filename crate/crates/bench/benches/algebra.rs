use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pimenov_bench::{factorization_inputs, invertible_batch};
use pimenov_core::{factor, invert, is_prime, parse, print, solve_division};

fn multiplication(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul");
    for n in [4, 8, 12] {
        let xs = invertible_batch(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &xs, |b, xs| {
            b.iter(|| black_box(&xs[0]).mul(black_box(&xs[1])).unwrap())
        });
    }
    group.finish();
}

fn inversion(c: &mut Criterion) {
    let mut group = c.benchmark_group("invert");
    for n in [4, 8, 12] {
        let x = invertible_batch(n, 1).remove(0);
        group.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| {
            b.iter(|| invert(black_box(x)).unwrap())
        });
    }
    group.finish();
}

fn division(c: &mut Criterion) {
    let mut group = c.benchmark_group("divide");
    for n in [3, 5, 7] {
        let xs = invertible_batch(n, 2);
        let a = xs[0].imag_part();
        let b = a.mul(&xs[1]).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &(a, b), |bench, (a, b)| {
            bench.iter(|| solve_division(black_box(a), black_box(b)).unwrap())
        });
    }
    group.finish();
}

fn factorization(c: &mut Criterion) {
    let mut group = c.benchmark_group("factor");
    for (name, x) in factorization_inputs() {
        group.bench_with_input(BenchmarkId::new("factor", name), &x, |b, x| {
            b.iter(|| factor(black_box(x)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("is_prime", name), &x, |b, x| {
            b.iter(|| is_prime(black_box(x)).unwrap())
        });
    }
    group.finish();
}

fn text(c: &mut Criterion) {
    let x = invertible_batch(10, 1).remove(0);
    let printed = print(&x);
    c.bench_function("print", |b| b.iter(|| print(black_box(&x))));
    c.bench_function("parse", |b| b.iter(|| parse(black_box(&printed), 10).unwrap()));
}

criterion_group!(benches, multiplication, inversion, division, factorization, text);
criterion_main!(benches);
