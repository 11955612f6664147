use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ilambda_core::oracle::{enumerate_window, verify, Suite, VerifyConfig, Window};
use ilambda_core::{solve_left, PartialSelfmap};

fn el(s: &str) -> PartialSelfmap {
    s.parse().expect("valid element")
}

fn compose(c: &mut Criterion) {
    let a = el("{1>3, 2>1, 5>9, 9>5, -3, -7}");
    let b = el("{1>4, 4>2, 2>1, 6>8, -6, -9}");
    c.bench_function("compose", |bench| {
        bench.iter(|| black_box(&a).compose(black_box(&b)))
    });
    c.bench_function("inverse", |bench| bench.iter(|| black_box(&a).inverse()));
}

fn solver(c: &mut Criterion) {
    let a = el("{1>3, 2>1, -3, -5}");
    let b = el("{1>4, 2>1, 4>2, -3, -5, -6}");
    c.bench_function("solve_left", |bench| {
        bench.iter(|| solve_left(black_box(&a), black_box(&b)))
    });
}

fn oracle(c: &mut Criterion) {
    let w4 = Window::first(4);
    c.bench_function("enumerate_window_4", |bench| {
        bench.iter(|| enumerate_window(black_box(&w4)))
    });
    let w2 = Window::first(2);
    let cfg = VerifyConfig::default();
    c.bench_function("verify_all_window_2", |bench| {
        bench.iter(|| verify(Suite::All, black_box(&w2), &cfg))
    });
}

criterion_group!(benches, compose, solver, oracle);
criterion_main!(benches);
