//! Sequential against parallel execution on the data-parallel paths.
//!
//! Built with `--no-default-features` both arms run sequentially, which
//! gives the baseline for the fallback build.

use std::hint::black_box;

use approxsys::catalog::{catalog_get, circle_grid, reference_error_grid, EntryKind, Params};
use approxsys::exec::Execution;
use approxsys::system::properness_audit;
use approxsys::verify::{verify, Scope};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn error_grid(c: &mut Criterion) {
    let exp = catalog_get(EntryKind::Exp, Params::default()).unwrap();
    let mut group = c.benchmark_group("reference_error_grid");
    for points in [1_000, 20_000] {
        let grid = circle_grid(Complex64::new(0.0, 0.0), 0.95, points).unwrap();
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(name, points), &grid, |b, grid| {
                b.iter(|| reference_error_grid(&exp, black_box(6), grid, mode).unwrap())
            });
        }
    }
    group.finish();
}

fn audit(c: &mut Criterion) {
    let sinh = catalog_get(EntryKind::Sinh, Params::default()).unwrap().system;
    let mut group = c.benchmark_group("properness_audit");
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| properness_audit(&sinh, black_box(5), 256, mode).unwrap()));
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_bounds");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| verify(Scope::Bounds, mode)));
    }
    group.finish();
}

criterion_group!(benches, error_grid, audit, suite);
criterion_main!(benches);
