use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};

/// Largest supported vertex count; neighbor sets are single `u64` words.
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

/// Small dense simple graph with per-vertex neighbor bitsets.
///
/// Adjacency is kept symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::arg(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {n}"
            )));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.adj[v] = low_mask(n) & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor rows, checking symmetry and the absence of loops.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::empty(n)?;
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::arg(format!("row {v} references a vertex >= {n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::arg(format!("loop at vertex {v}")));
            }
            for w in Bits(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(Error::arg(format!("asymmetric adjacency {v}-{w}")));
                }
            }
            g.adj[v] = row;
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(rows: &[u64]) -> Self {
        let mut adj = [0; MAX_VERTICES];
        adj[..rows.len()].copy_from_slice(rows);
        Graph {
            n: rows.len(),
            adj,
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::arg(format!("loop at vertex {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(Error::arg(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows().iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |v| Bits(self.adj[v] & low_mask(v)).map(move |u| (u, v)))
    }

    /// Vertices with their degrees, non-increasing by degree; ties by ascending vertex.
    pub fn degree_sequence(&self) -> Vec<(Vertex, usize)> {
        let mut seq: Vec<_> = (0..self.n).map(|v| (v, self.degree(v))).collect();
        seq.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        seq
    }

    /// Union of the neighborhoods of a vertex set.
    pub fn neighborhood(&self, set: u64) -> u64 {
        Bits(set).fold(0, |acc, v| acc | self.adj[v])
    }

    /// Number of edges with one end in `a` and the other in `b` (sets may overlap;
    /// an edge inside the overlap is counted once).
    pub fn edges_between(&self, a: u64, b: u64) -> usize {
        self.edges()
            .filter(|&(u, v)| {
                let (u, v) = (bit(u), bit(v));
                (u & a != 0 && v & b != 0) || (v & a != 0 && u & b != 0)
            })
            .count()
    }

    /// The graph whose vertex `perm[v]` plays the role of `v`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::arg("permutation length differs from vertex count"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::arg("not a permutation"));
            }
            seen |= bit(p);
        }
        let mut g = Self::empty(self.n)?;
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= bit(perm[v]);
            g.adj[perm[v]] |= bit(perm[u]);
        }
        Ok(g)
    }

    /// Disjoint union with `k` extra isolated vertices.
    pub fn with_isolated(&self, k: usize) -> Result<Self> {
        let mut g = Self::empty(self.n + k)?;
        g.adj[..self.n].copy_from_slice(self.rows());
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", crate::graph6::to_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::to_graph6(self))
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&crate::graph6::to_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::graph6::from_graph6(&s).map_err(serde::de::Error::custom)
    }
}
