use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use g2_tokuyama::paramsum::{adj_symbolic, std_symbolic, std_symbolic_with, Expansion};
use g2_tokuyama::patterns::count;
use g2_tokuyama_bench::{character, d_power, symbolic_final, verify_cell, weight, CELLS};

fn brute_force(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute_force");
    g.sample_size(10);
    for (l1, l2) in CELLS {
        let id = format!("{l1}x{l2}");
        g.bench_with_input(BenchmarkId::new("count", &id), &(l1, l2), |b, &(l1, l2)| {
            b.iter(|| count(black_box(weight(l1, l2))))
        });
        g.bench_with_input(BenchmarkId::new("verify", &id), &(l1, l2), |b, &(l1, l2)| {
            b.iter(|| verify_cell(black_box(l1), black_box(l2)))
        });
    }
    g.finish();
}

fn symbolic(c: &mut Criterion) {
    let mut g = c.benchmark_group("symbolic");
    g.sample_size(10);
    g.bench_function("std_merged", |b| b.iter(|| std_symbolic().unwrap()));
    g.bench_function("std_raw", |b| b.iter(|| std_symbolic_with(Expansion::Raw).unwrap()));
    g.bench_function("adj_merged", |b| b.iter(|| adj_symbolic().unwrap()));
    g.bench_function("final_table", |b| b.iter(|| symbolic_final(black_box(0), black_box(1)).unwrap()));
    g.finish();
}

fn algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("algebra");
    g.bench_function("d_poly_pow4", |b| b.iter(|| d_power(black_box(4))));
    g.bench_function("character_6x6", |b| b.iter(|| character(black_box(6), black_box(6))));
    g.finish();
}

criterion_group!(benches, brute_force, symbolic, algebra);
criterion_main!(benches);
