use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use pathdeg_bench::{cycle, seeded_graph, seeded_lemma};
use pathdeg_core::bounds::even_proof_bound;
use pathdeg_core::paths::rows_avoid;
use pathdeg_core::sample::LemmaKind;
use pathdeg_core::search::count_nonisomorphic;
use pathdeg_core::{
    build_path, canonical_graph6, complete_bipartite, from_graph6, p_canonical, to_graph6,
    SearchOptions,
};

fn graph6(c: &mut Criterion) {
    let g = seeded_graph(40, 0.5, 1);
    let s = to_graph6(&g);
    c.bench_function("graph6/encode n=40", |b| b.iter(|| to_graph6(black_box(&g))));
    c.bench_function("graph6/decode n=40", |b| b.iter(|| from_graph6(black_box(&s)).unwrap()));
}

fn canon(c: &mut Criterion) {
    let random10 = seeded_graph(10, 0.5, 2);
    let random30 = seeded_graph(30, 0.3, 3);
    let c11 = cycle(11);
    let k55 = complete_bipartite(5, 5).unwrap();
    c.bench_function("canon/random n=10", |b| b.iter(|| canonical_graph6(black_box(&random10))));
    c.bench_function("canon/random n=30", |b| b.iter(|| canonical_graph6(black_box(&random30))));
    c.bench_function("canon/cycle n=11", |b| b.iter(|| canonical_graph6(black_box(&c11))));
    c.bench_function("canon/K5,5", |b| b.iter(|| canonical_graph6(black_box(&k55))));
}

fn avoidance(c: &mut Criterion) {
    let k56 = complete_bipartite(5, 6).unwrap();
    let dense = seeded_graph(10, 0.7, 4);
    c.bench_function("avoid/K5,6 ell=5", |b| b.iter(|| rows_avoid(black_box(k56.rows()), 5)));
    c.bench_function("avoid/random n=10 ell=6", |b| b.iter(|| rows_avoid(black_box(dense.rows()), 6)));
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("p_canonical n=8 ell=3", |b| {
        b.iter(|| p_canonical(8, 3, SearchOptions::default()).unwrap())
    });
    group.bench_function("count classes n=8", |b| b.iter(|| count_nonisomorphic(8, 0).unwrap()));
    group.finish();
}

fn lemma_and_bounds(c: &mut Criterion) {
    let inst = seeded_lemma(LemmaKind::C, 5);
    c.bench_function("lemma/build case c", |b| b.iter(|| build_path(black_box(&inst)).unwrap()));
    c.bench_function("bounds/even proof bound n=200", |b| {
        b.iter(|| even_proof_bound(black_box(200), 3))
    });
}

criterion_group!(benches, graph6, canon, avoidance, search, lemma_and_bounds);
criterion_main!(benches);
