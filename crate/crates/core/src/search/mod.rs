//! Exact computation of `p_ell(n)`, the largest edge count of an `n`-vertex
//! graph with no two equal-degree vertices joined by a path of length `ell`.
//!
//! Avoidance is not monotone under adding or removing edges, so the only
//! sound acceleration is by edge count: graphs with fewer edges than a known
//! avoider can be skipped, never pruned by structure.

mod augment;
mod labeled;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_graph6;
use crate::constructions::certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paths::rows_avoid;

use augment::{descend, level_nodes, Augmenter};

pub const LABELED_MAX_N: usize = 8;
pub const CANONICAL_MAX_N: usize = 11;
pub const DEFAULT_WITNESS_CAP: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Labeled,
    Canonical,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Labeled => "labeled",
            Method::Canonical => "canonical",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "labeled" => Ok(Method::Labeled),
            "canonical" => Ok(Method::Canonical),
            _ => Err(Error::arg(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Witnesses listed in the record; the total count is always exact.
    pub witness_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Graphs on which the avoidance test was run.
    pub graphs_examined: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub ell: usize,
    pub n: usize,
    pub p: usize,
    pub method: Method,
    /// Canonical graph6 strings of extremal avoiders, sorted, at most the cap.
    pub witnesses: Vec<String>,
    /// Number of pairwise non-isomorphic extremal avoiders.
    pub witness_count: usize,
    pub stats: SearchStats,
}

impl SearchRecord {
    pub fn same_result(&self, other: &SearchRecord) -> bool {
        (self.ell, self.n, self.p, &self.witnesses, self.witness_count)
            == (other.ell, other.n, other.p, &other.witnesses, other.witness_count)
    }
}

/// Best edge count seen by one worker and the canonical forms attaining it.
#[derive(Default)]
struct Partial {
    best: Option<usize>,
    witnesses: BTreeSet<String>,
    examined: u64,
}

impl Partial {
    fn offer(&mut self, edges: usize, graph: impl FnOnce() -> String) {
        match self.best {
            Some(b) if edges < b => return,
            Some(b) if edges == b => {}
            _ => {
                self.best = Some(edges);
                self.witnesses.clear();
            }
        }
        self.witnesses.insert(graph());
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.examined += other.examined;
        match (self.best, other.best) {
            (_, None) => {}
            (None, Some(_)) => {
                self.best = other.best;
                self.witnesses = other.witnesses;
            }
            (Some(a), Some(b)) if b > a => {
                self.best = other.best;
                self.witnesses = other.witnesses;
            }
            (Some(a), Some(b)) if a == b => self.witnesses.extend(other.witnesses),
            _ => {}
        }
        self
    }

    fn into_record(self, ell: usize, n: usize, method: Method, opts: SearchOptions, start: Instant) -> SearchRecord {
        let witness_count = self.witnesses.len();
        SearchRecord {
            ell,
            n,
            p: self.best.unwrap_or(0),
            method,
            witnesses: self.witnesses.into_iter().take(opts.witness_cap).collect(),
            witness_count,
            stats: SearchStats {
                graphs_examined: self.examined,
                elapsed_ms: start.elapsed().as_millis() as u64,
            },
        }
    }
}

fn check_ell(n: usize, ell: usize) -> Result<()> {
    if ell == 0 || ell >= n {
        return Err(Error::arg(format!("need 1 <= ell < n, got ell = {ell}, n = {n}")));
    }
    Ok(())
}

fn canonical_of_rows(rows: &[u64]) -> String {
    canonical_graph6(&Graph::from_rows_unchecked(rows))
}

/// Exhaustion over all labeled graphs, densest edge counts first. This is the
/// reference every other search path is checked against.
pub fn p_labeled(n: usize, ell: usize, opts: SearchOptions) -> Result<SearchRecord> {
    if n > LABELED_MAX_N {
        return Err(Error::CostGuard {
            method: "labeled",
            limit: LABELED_MAX_N,
            n,
        });
    }
    check_ell(n, ell)?;
    let start = Instant::now();
    let partial = labeled::search(n, ell);
    Ok(partial.into_record(ell, n, Method::Labeled, opts, start))
}

/// Isomorph-free search: one representative per isomorphism class, restricted
/// to edge counts at least that of the verified lower-bound construction.
pub fn p_canonical(n: usize, ell: usize, opts: SearchOptions) -> Result<SearchRecord> {
    if n > CANONICAL_MAX_N {
        return Err(Error::CostGuard {
            method: "canonical",
            limit: CANONICAL_MAX_N,
            n,
        });
    }
    check_ell(n, ell)?;
    let start = Instant::now();
    let cert = certificate(ell, n)?;
    let floor = if cert.verified { cert.edges } else { 0 };
    let best = AtomicUsize::new(floor);
    let threshold = || best.load(Ordering::Relaxed);

    let split = split_level(n);
    let roots = level_nodes(split, n, floor);
    let partial = roots
        .par_iter()
        .fold(
            || (Augmenter::new(), Partial::default()),
            |(mut aug, mut part), root| {
                descend(&mut aug, root, n, &threshold, &mut |g| {
                    if g.edges < threshold() {
                        return;
                    }
                    part.examined += 1;
                    if rows_avoid(g.rows(), ell) {
                        best.fetch_max(g.edges, Ordering::Relaxed);
                        part.offer(g.edges, || canonical_of_rows(g.rows()));
                    }
                });
                (aug, part)
            },
        )
        .map(|(_, p)| p)
        .reduce(Partial::default, Partial::merge);
    Ok(partial.into_record(ell, n, Method::Canonical, opts, start))
}

fn split_level(n: usize) -> usize {
    n.saturating_sub(3).clamp(1, n)
}

/// One graph per isomorphism class on `n` vertices (`1 <= n <= 11`).
///
/// The classes on `n - 1` vertices are materialized; the last level is
/// produced lazily.
pub fn enumerate_nonisomorphic(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > CANONICAL_MAX_N {
        return Err(Error::arg(format!("n must be in 1..={CANONICAL_MAX_N}")));
    }
    let parents = if n == 1 { Vec::new() } else { level_nodes(n - 1, n - 1, 0) };
    let single = (n == 1).then(|| Graph::empty(1).unwrap());
    let mut aug = Augmenter::new();
    let rest = parents.into_iter().flat_map(move |p| {
        let mut kids = Vec::new();
        aug.children(&p, 0, |c| kids.push(Graph::from_rows_unchecked(c.rows())));
        kids
    });
    Ok(single.into_iter().chain(rest))
}

/// Number of isomorphism classes of graphs on `n` vertices with at least
/// `min_edges` edges.
pub fn count_nonisomorphic(n: usize, min_edges: usize) -> Result<u64> {
    if n == 0 || n > CANONICAL_MAX_N {
        return Err(Error::arg(format!("n must be in 1..={CANONICAL_MAX_N}")));
    }
    let split = split_level(n);
    let roots = level_nodes(split, n, min_edges);
    let floor = move || min_edges;
    Ok(roots
        .par_iter()
        .map_init(Augmenter::new, |aug, root| {
            let mut count = 0u64;
            descend(aug, root, n, &floor, &mut |g| {
                if g.edges >= min_edges {
                    count += 1;
                }
            });
            count
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        let expected: [u64; 7] = [1, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_nonisomorphic(n).unwrap().count() as u64, want, "n = {n}");
            assert_eq!(count_nonisomorphic(n, 0).unwrap(), want, "n = {n}");
        }
    }

    #[test]
    fn p_labeled_examples() {
        let r = p_labeled(5, 3, SearchOptions::default()).unwrap();
        assert_eq!(r.p, 6);
        assert_eq!(r.witness_count, 1);
        assert_eq!(r.witnesses[0], canonical_graph6(&crate::complete_bipartite(2, 3).unwrap()));
        assert_eq!(p_labeled(4, 2, SearchOptions::default()).unwrap().p, 3);
        let r = p_labeled(3, 1, SearchOptions::default()).unwrap();
        assert_eq!(r.p, 2);
        assert_eq!(r.witness_count, 1);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            p_labeled(9, 3, SearchOptions::default()),
            Err(Error::CostGuard { limit: 8, .. })
        ));
        assert!(matches!(
            p_canonical(12, 3, SearchOptions::default()),
            Err(Error::CostGuard { limit: 11, .. })
        ));
        assert!(p_canonical(5, 5, SearchOptions::default()).is_err());
        assert!(p_labeled(5, 0, SearchOptions::default()).is_err());
    }

    #[test]
    fn canonical_matches_labeled_small() {
        for n in 2..=6 {
            for ell in 1..n {
                let a = p_labeled(n, ell, SearchOptions::default()).unwrap();
                let b = p_canonical(n, ell, SearchOptions::default()).unwrap();
                assert!(a.same_result(&b), "n = {n}, ell = {ell}: {a:?} vs {b:?}");
            }
        }
    }
}
