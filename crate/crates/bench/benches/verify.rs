use criterion::{criterion_group, criterion_main, Criterion};
use kyfan_core::{
    check_ratio_kyfan, eval_mean, lookup, roundtrip_check, GridSpec, DEFAULT_TOL,
};

fn bench_eval(c: &mut Criterion) {
    c.bench_function("eval L", |b| {
        b.iter(|| eval_mean(std::hint::black_box("L"), 0.13, 0.41).unwrap())
    });
    c.bench_function("eval NS", |b| {
        b.iter(|| eval_mean(std::hint::black_box("NS"), 0.13, 0.41).unwrap())
    });
}

fn bench_ratio_kyfan(c: &mut Criterion) {
    let g = lookup("G").unwrap();
    let a = lookup("A").unwrap();
    let grid = GridSpec::default_kyfan().with_counts(100, 100);
    c.bench_function("ratio kyfan G<=A 100x100", |b| {
        b.iter(|| check_ratio_kyfan(&g, &a, &grid, DEFAULT_TOL).unwrap())
    });
}

fn bench_roundtrip(c: &mut Criterion) {
    let ns = lookup("NS").unwrap();
    let grid = GridSpec::new(0.05, 10.0, 0.05, 10.0, 50, 50).unwrap();
    c.bench_function("roundtrip NS 50x50", |b| {
        b.iter(|| roundtrip_check(&ns, &grid, DEFAULT_TOL))
    });
}

criterion_group!(benches, bench_eval, bench_ratio_kyfan, bench_roundtrip);
criterion_main!(benches);
