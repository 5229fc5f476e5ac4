use std::hint::black_box;

use ca_forge_core::discriminant::disc_table;
use ca_forge_core::exec::Exec;
use ca_forge_core::field::Rational;
use ca_forge_core::groebner::DEFAULT_SPAIR_BUDGET;
use ca_forge_core::search::{mainprop_verify, search_counterexamples, tuple_regularity_sweep, DEFAULT_ENUMERATION_BUDGET};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::default())]
}

fn regularity(c: &mut Criterion) {
    let mut g = c.benchmark_group("regularity_sweep");
    g.sample_size(10);
    for n in [4usize, 5] {
        for (name, exec) in modes() {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| tuple_regularity_sweep::<Rational>(black_box(n), n - 1, &(), DEFAULT_SPAIR_BUDGET, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn deformation(c: &mut Criterion) {
    let mut g = c.benchmark_group("mainprop");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_function(BenchmarkId::new(name, 4), |b| {
            b.iter(|| mainprop_verify::<Rational>(black_box(4), &(), DEFAULT_SPAIR_BUDGET, exec).unwrap())
        });
    }
    g.finish();
}

fn scan(c: &mut Criterion) {
    let table = disc_table(5).unwrap();
    let mut g = c.benchmark_group("counterexample_scan_n5");
    g.sample_size(10);
    for p in [5u32, 7] {
        for (name, exec) in modes() {
            g.bench_with_input(BenchmarkId::new(name, p), &p, |b, &p| {
                b.iter(|| search_counterexamples(&table, black_box(p), DEFAULT_ENUMERATION_BUDGET, exec).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, regularity, deformation, scan);
criterion_main!(benches);
