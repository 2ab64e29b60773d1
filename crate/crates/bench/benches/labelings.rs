use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use pdg_bench::petersen;
use pdg_core::constructors::{extend_odd_cycle, label_outerplanar, CycleLabelerTable};
use pdg_core::corpus::outerplanar_corpus;
use pdg_core::graph::chromatic_number;
use pdg_core::labeling::verify_strict;
use pdg_core::ntheory::primes_up_to;
use pdg_core::search::{enumerate_labelings, search_labeling, Predicate, SearchConfig};
use pdg_core::{Graph, Labeling};

fn bench_sieve(c: &mut Criterion) {
    c.bench_function("primes_up_to_1e6", |b| {
        b.iter(|| primes_up_to(black_box(1_000_000)))
    });
}

fn bench_search(c: &mut Criterion) {
    let (g, _) = Graph::complete_multipartite(&[1, 2, 2]).unwrap();
    let cfg = SearchConfig::new(30, Predicate::Product { k: 1 });
    c.bench_function("enumerate_k122_product1_b30", |b| {
        b.iter(|| enumerate_labelings(black_box(&g), black_box(&cfg), 10_000))
    });

    let (g123, _) = Graph::complete_multipartite(&[1, 2, 3]).unwrap();
    let cfg_exhaust = SearchConfig::new(50, Predicate::Product { k: 1 });
    c.bench_function("exhaust_k123_product1_b50", |b| {
        b.iter(|| search_labeling(black_box(&g123), black_box(&cfg_exhaust)))
    });
}

fn bench_chromatic(c: &mut Criterion) {
    let g = petersen();
    c.bench_function("chromatic_petersen", |b| {
        b.iter(|| chromatic_number(black_box(&g), 1_000_000))
    });
}

fn bench_constructors(c: &mut Criterion) {
    let base = Labeling::from_values(&[0, 2, 5]);
    c.bench_function("extend_c3_by_10", |b| {
        b.iter(|| extend_odd_cycle(black_box(&base), 10, 1))
    });

    let table = CycleLabelerTable::default();
    let inst = outerplanar_corpus(1, 9, 7).remove(0);
    c.bench_function("label_outerplanar_first_instance", |b| {
        b.iter(|| label_outerplanar(black_box(&inst.graph), &inst.blocks, 1, &table))
    });
}

fn bench_verify(c: &mut Criterion) {
    let (_, c7) = pdg_core::fixtures::c7_strict_square();
    let big = extend_odd_cycle(&c7, 40, 2).unwrap();
    let g = Graph::cycle(87).unwrap();
    c.bench_function("verify_strict_c87_squares", |b| {
        b.iter(|| verify_strict(black_box(&g), black_box(&big), 2))
    });
}

criterion_group!(
    benches,
    bench_sieve,
    bench_search,
    bench_chromatic,
    bench_constructors,
    bench_verify
);
criterion_main!(benches);
