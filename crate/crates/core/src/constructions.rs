//! Lower-bound constructions: complete bipartite graphs and half graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::paths::avoids;

/// `K_{a,b}` on vertices `0..a` versus `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::arg("both sides of K_{a,b} must be nonempty"));
    }
    bipartite_unchecked(a, b)
}

fn bipartite_unchecked(a: usize, b: usize) -> Result<Graph> {
    if a + b > MAX_VERTICES {
        return Err(Error::arg(format!("K_{{{a},{b}}} exceeds {MAX_VERTICES} vertices")));
    }
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Half graph on `2m` vertices: `u_1..u_m` are `0..m`, `v_1..v_m` are
/// `m..2m`, and `u_i v_j` is an edge exactly when `i <= j`.
pub fn half_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::arg("half graph needs m >= 1"));
    }
    if 2 * m > MAX_VERTICES {
        return Err(Error::arg(format!("half graph on {} vertices exceeds {MAX_VERTICES}", 2 * m)));
    }
    let mut g = Graph::empty(2 * m)?;
    for i in 0..m {
        for j in i..m {
            g.add_edge(i, m + j)?;
        }
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    CompleteBipartite { a: usize, b: usize },
    HalfGraph { m: usize },
    /// Half graph plus one isolated vertex, used for even `ell` and odd `n`.
    HalfGraphPlusIsolated { m: usize },
}

impl Construction {
    /// Edge count predicted by the construction's formula.
    pub fn edge_formula(&self) -> usize {
        match *self {
            Construction::CompleteBipartite { a, b } => a * b,
            Construction::HalfGraph { m } | Construction::HalfGraphPlusIsolated { m } => {
                m * (m + 1) / 2
            }
        }
    }

    /// Whether the construction is one of the classical extremal examples
    /// rather than the padding used for even `ell` with odd `n`.
    pub fn is_classical(&self) -> bool {
        !matches!(self, Construction::HalfGraphPlusIsolated { .. })
    }
}

/// A construction for `(ell, n)` together with the checker's verdict on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub ell: usize,
    pub n: usize,
    pub construction: Construction,
    pub classical: bool,
    pub graph: Graph,
    pub edges: usize,
    pub verified: bool,
}

/// Lower-bound witness for `p_ell(n)`: `K_{m,m+1}` / `K_{m-1,m+1}` for odd
/// `ell`, the half graph (padded with an isolated vertex when `n` is odd) for
/// even `ell`. The graph is always re-checked.
pub fn certificate(ell: usize, n: usize) -> Result<Certificate> {
    if ell == 0 {
        return Err(Error::arg("ell must be positive"));
    }
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::arg(format!("n must be in 1..={MAX_VERTICES}")));
    }
    let m = n / 2;
    let (construction, graph) = if ell % 2 == 1 {
        let (a, b) = if n % 2 == 1 { (m, m + 1) } else { (m - 1, m + 1) };
        let g = if a == 0 { Graph::empty(n)? } else { bipartite_unchecked(a, b)? };
        (Construction::CompleteBipartite { a, b }, g)
    } else if n % 2 == 0 {
        (Construction::HalfGraph { m }, half_graph(m)?)
    } else {
        let g = if m == 0 { Graph::empty(1)? } else { half_graph(m)?.with_isolated(1)? };
        (Construction::HalfGraphPlusIsolated { m }, g)
    };
    Ok(Certificate {
        ell,
        n,
        classical: construction.is_classical(),
        construction,
        edges: graph.edge_count(),
        verified: avoids(&graph, ell),
        graph,
    })
}
