//! Fixed inputs shared by the benchmarks.

use pathdeg_core::sample::{lemma_instance, random_graph, LemmaKind};
use pathdeg_core::{Graph, LemmaInstance};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// `G(n, p)` drawn from a fixed seed.
pub fn seeded_graph(n: usize, p: f64, seed: u64) -> Graph {
    random_graph(&mut StdRng::seed_from_u64(seed), n, p)
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// A valid path-lemma instance of the given kind, from a fixed seed.
pub fn seeded_lemma(kind: LemmaKind, seed: u64) -> LemmaInstance {
    lemma_instance(&mut StdRng::seed_from_u64(seed), kind)
}
