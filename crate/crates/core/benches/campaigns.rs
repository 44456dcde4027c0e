//! Sequential against parallel execution of two campaigns.
//!
//! On a single-core machine the two modes should be within noise of each
//! other; the parallel numbers only pull ahead with more workers.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ncm_core::campaigns;
use ncm_core::par::Execution;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut m = vec![("sequential", Execution::Sequential)];
    if cfg!(feature = "parallel") {
        m.push(("parallel", Execution::Parallel));
    }
    m
}

fn coupling(c: &mut Criterion) {
    let mut group = c.benchmark_group("coupling n=100 x 200 traces");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(campaigns::coupling(100, 200, 11, mode)))
        });
    }
    group.finish();
}

fn sorted(c: &mut Criterion) {
    let mut group = c.benchmark_group("sorted 100 x n<=10");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| black_box(campaigns::sorted_optimality(100, 10, 3, mode)))
        });
    }
    group.finish();
}

criterion_group!(benches, coupling, sorted);
criterion_main!(benches);
