//! Invariant searches on a single worker versus the default pool.
//!
//! Build with `--no-default-features` to time the plain sequential loops.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use radon_lab::generators::{grid_box_space, lattice_window_space, GridBoxSpec, LatticeWindowSpec};
use radon_lab::hypergraph::{associated_space, min_m_tk, Hypergraph};
use radon_lab::invariants::{colorful_helly_number, helly_number, radon_number, tverberg_number, Pool};
use radon_lab::{par, Budget, ConvexitySpace};

fn spaces() -> Vec<(&'static str, ConvexitySpace)> {
    vec![
        ("grid44", grid_box_space(&GridBoxSpec::new(vec![4, 4]).unwrap()).unwrap()),
        ("lattice33", lattice_window_space(&LatticeWindowSpec::new(vec![3, 3]).unwrap()).unwrap()),
    ]
}

const POOLS: [(&str, usize); 2] = [("one_thread", 1), ("default_pool", 0)];

fn invariants(c: &mut Criterion) {
    for (name, space) in spaces() {
        let mut group = c.benchmark_group(format!("invariants/{name}"));
        group.sample_size(10);
        for (pool, threads) in POOLS {
            group.bench_function(BenchmarkId::new("radon", pool), |b| {
                b.iter(|| par::with_threads(threads, || radon_number(black_box(&space), true, &Budget::unlimited())))
            });
            group.bench_function(BenchmarkId::new("helly", pool), |b| {
                b.iter(|| par::with_threads(threads, || helly_number(black_box(&space), &Budget::unlimited())))
            });
            group.bench_function(BenchmarkId::new("tverberg3", pool), |b| {
                b.iter(|| par::with_threads(threads, || tverberg_number(black_box(&space), 3, true, &Budget::unlimited())))
            });
            group.bench_function(BenchmarkId::new("colorful", pool), |b| {
                b.iter(|| {
                    par::with_threads(threads, || {
                        colorful_helly_number(black_box(&space), Pool::Generators, &Budget::unlimited())
                    })
                })
            });
        }
        group.finish();
    }
}

fn hypergraphs(c: &mut Criterion) {
    let h = Hypergraph::matching(2, 3).unwrap();
    let mut group = c.benchmark_group("hypergraph/matching3");
    group.sample_size(10);
    for (pool, threads) in POOLS {
        group.bench_function(BenchmarkId::new("associated_space", pool), |b| {
            b.iter(|| par::with_threads(threads, || associated_space(black_box(&h)).unwrap()))
        });
        group.bench_function(BenchmarkId::new("min_m_tk", pool), |b| {
            b.iter(|| par::with_threads(threads, || min_m_tk(black_box(&h), 8).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, invariants, hypergraphs);
criterion_main!(benches);
