//! The data-parallel paths against a single worker on the same workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use corita::algebra::standard::{matrix, upper_triangular};
use corita::algebra::{firm_square, validate};
use corita::coring::{hopf_module_coring, HopfAlgebra};
use corita::exactlin::Field;
use corita::galois::comodule_catalog;
use corita::{examples, par};

const Q: Field = Field::Rational;

type Workload = (&'static str, Box<dyn Fn() + Sync>);

fn workloads() -> Vec<Workload> {
    vec![
        ("validate M3", Box::new(|| assert!(validate(black_box(&matrix(Q, 3))).ok()))),
        ("firm square T4", Box::new(|| drop(black_box(firm_square(&upper_triangular(Q, 4)).unwrap())))),
        (
            "Hopf Z/3 catalog",
            Box::new(|| {
                let c = hopf_module_coring(&HopfAlgebra::cyclic_group(Q, 3)).unwrap();
                black_box(comodule_catalog(&c, &[], 6).unwrap());
            }),
        ),
        ("example hopf-z2", Box::new(|| assert!(examples::run("hopf-z2").unwrap().passed()))),
    ]
}

fn sweep(c: &mut Criterion) {
    let threads = std::thread::available_parallelism().map_or(1, usize::from);
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, work) in workloads() {
        group.bench_function(BenchmarkId::new("parallel", name), |b| {
            b.iter(|| par::with_threads(threads, &work))
        });
        group.bench_function(BenchmarkId::new("sequential", name), |b| {
            b.iter(|| par::with_threads(1, &work))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
