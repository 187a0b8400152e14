//! Corpus-sweep benchmarks: inline sequential iteration versus the `batch`
//! helpers, which fan out over rayon under the default `parallel` feature.
//! Build with `--no-default-features` to measure the sequential fallback on
//! the same benchmark names.

use criterion::{criterion_group, criterion_main, Criterion, Throughput};

use quatlin::batch;
use quatlin::linfun::{CoefficientMatrix, GeneralLinearFunction};
use quatlin::quat::Quaternion;
use quatlin::random::Lcg64;
use quatlin::svd::{minimal_decomposition, MinimalDecomposition};

fn corpus(count: usize, terms: usize, seed: u64) -> Vec<GeneralLinearFunction> {
    let mut rng = Lcg64::new(seed);
    (0..count).map(|_| rng.next_function(terms)).collect()
}

fn rank_sweep(c: &mut Criterion) {
    let functions = corpus(2048, 10, 11);
    let mut group = c.benchmark_group("rank_sweep");
    group.throughput(Throughput::Elements(functions.len() as u64));
    group.bench_function("sequential", |b| {
        b.iter(|| -> Vec<usize> {
            functions.iter().map(|f| f.matrix().numeric_rank()).collect()
        })
    });
    group.bench_function("batch", |b| b.iter(|| batch::ranks(&functions)));
    group.finish();
}

fn decomposition_sweep(c: &mut Criterion) {
    let functions = corpus(2048, 10, 12);
    let mut group = c.benchmark_group("decomposition_sweep");
    group.throughput(Throughput::Elements(functions.len() as u64));
    group.bench_function("sequential", |b| {
        b.iter(|| -> Vec<MinimalDecomposition> {
            functions
                .iter()
                .map(|f| minimal_decomposition(&f.matrix()))
                .collect()
        })
    });
    group.bench_function("batch", |b| b.iter(|| batch::minimal_decompositions(&functions)));
    group.finish();
}

fn matrix_sweep(c: &mut Criterion) {
    let functions = corpus(4096, 50, 13);
    let mut group = c.benchmark_group("matrix_sweep");
    group.throughput(Throughput::Elements(functions.len() as u64));
    group.bench_function("sequential", |b| {
        b.iter(|| -> Vec<CoefficientMatrix> { functions.iter().map(|f| f.matrix()).collect() })
    });
    group.bench_function("batch", |b| b.iter(|| batch::matrices(&functions)));
    group.finish();
}

fn evaluation_grid(c: &mut Criterion) {
    let mut rng = Lcg64::new(14);
    let f = rng.next_function(10);
    let args: Vec<Quaternion> = (0..100_000).map(|_| rng.next_quaternion()).collect();
    let mut group = c.benchmark_group("evaluation_grid");
    group.throughput(Throughput::Elements(args.len() as u64));
    group.bench_function("sequential", |b| {
        b.iter(|| -> Vec<Quaternion> { args.iter().map(|&q| f.evaluate(q)).collect() })
    });
    group.bench_function("batch", |b| b.iter(|| batch::evaluate_grid(&f, &args)));
    group.finish();
}

criterion_group!(benches, rank_sweep, decomposition_sweep, matrix_sweep, evaluation_grid);
criterion_main!(benches);
