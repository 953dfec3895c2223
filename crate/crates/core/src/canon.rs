//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the unit partition to an
//! equitable ordered partition, then repeatedly individualize each vertex of
//! the first non-singleton cell and refine again. Every discrete leaf induces
//! a relabeled adjacency matrix; the canonical form is the largest of them.
//! Leaves that reproduce the first leaf's or the current best leaf's matrix
//! yield automorphisms, which prune children lying in a known orbit of the
//! pointwise stabilizer of the current prefix. The automorphisms found this
//! way generate the full group, so the reported orbits are exact.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, Bits};
use crate::graph::{Graph, Vertex, MAX_VERTICES};
use crate::graph6::to_graph6;

const N: usize = MAX_VERTICES;

/// Ordered partition of `0..n`, stored as a vertex list cut into cells.
/// Cells are identified by their start position.
#[derive(Clone)]
pub(crate) struct Partition {
    n: usize,
    lab: [u8; N],
    /// start position of the cell containing each position
    cstart: [u8; N],
    /// exclusive end, valid at cell starts
    cend: [u8; N],
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut p = Partition {
            n,
            lab: [0; N],
            cstart: [0; N],
            cend: [0; N],
            cells: 1,
        };
        for i in 0..n {
            p.lab[i] = i as u8;
        }
        p.cend[0] = n as u8;
        p
    }

    #[inline]
    pub(crate) fn is_discrete(&self) -> bool {
        self.cells == self.n
    }

    fn cell_mask(&self, start: usize) -> u64 {
        self.lab[start..self.cend[start] as usize]
            .iter()
            .fold(0, |m, &v| m | bit(v as usize))
    }

    /// Vertex set of the last cell.
    pub(crate) fn last_cell(&self) -> u64 {
        let start = self.cstart[self.n - 1] as usize;
        self.cell_mask(start)
    }

    fn first_nonsingleton(&self) -> Option<usize> {
        let mut s = 0;
        while s < self.n {
            let e = self.cend[s] as usize;
            if e - s > 1 {
                return Some(s);
            }
            s = e;
        }
        None
    }

    /// Split `v` off the front of its cell. Returns the new singleton's start.
    fn individualize(&mut self, v: u8) -> usize {
        let pos = self.lab[..self.n].iter().position(|&w| w == v).unwrap();
        let s = self.cstart[pos] as usize;
        let e = self.cend[s] as usize;
        self.lab.swap(s, pos);
        self.cend[s] = (s + 1) as u8;
        self.cend[s + 1] = e as u8;
        for p in s + 1..e {
            self.cstart[p] = (s + 1) as u8;
        }
        self.cells += 1;
        s
    }

    /// Refine to the coarsest equitable partition finer than `self`, starting
    /// from the splitter cells whose starts are set in `queue`.
    fn refine(&mut self, rows: &[u64], mut queue: u64) {
        let mut counts = [0u32; N];
        let mut scratch = [(0u32, 0u8); N];
        while queue != 0 && !self.is_discrete() {
            let w = queue.trailing_zeros() as usize;
            queue &= queue - 1;
            let wmask = self.cell_mask(w);
            let mut s = 0;
            while s < self.n {
                let e = self.cend[s] as usize;
                if e - s == 1 {
                    s = e;
                    continue;
                }
                let mut uniform = true;
                for p in s..e {
                    counts[p] = (rows[self.lab[p] as usize] & wmask).count_ones();
                    uniform &= counts[p] == counts[s];
                }
                if uniform {
                    s = e;
                    continue;
                }
                let cell = &mut scratch[..e - s];
                for (slot, p) in cell.iter_mut().zip(s..e) {
                    *slot = (counts[p], self.lab[p]);
                }
                cell.sort_unstable();
                let was_queued = queue & bit(s) != 0;
                let mut pieces = [0usize; N];
                let mut npieces = 0;
                let mut largest = (0usize, 0usize);
                let mut start = s;
                for (i, &(c, v)) in cell.iter().enumerate() {
                    let p = s + i;
                    self.lab[p] = v;
                    if i > 0 && c != cell[i - 1].0 {
                        self.close_piece(start, p, &mut pieces, &mut npieces, &mut largest);
                        start = p;
                    }
                    self.cstart[p] = start as u8;
                }
                self.close_piece(start, e, &mut pieces, &mut npieces, &mut largest);
                self.cells += npieces - 1;
                for &piece in &pieces[..npieces] {
                    if was_queued || piece != largest.1 {
                        queue |= bit(piece);
                    }
                }
                s = e;
            }
        }
    }

    #[inline]
    fn close_piece(
        &mut self,
        start: usize,
        end: usize,
        pieces: &mut [usize; N],
        npieces: &mut usize,
        largest: &mut (usize, usize),
    ) {
        self.cend[start] = end as u8;
        pieces[*npieces] = start;
        *npieces += 1;
        if end - start > largest.0 {
            *largest = (end - start, start);
        }
    }

    /// Adjacency rows of the graph relabeled so that the vertex at position
    /// `i` becomes vertex `i`.
    fn leaf_rows(&self, rows: &[u64], out: &mut [u64]) {
        let mut pos = [0u8; N];
        for i in 0..self.n {
            pos[self.lab[i] as usize] = i as u8;
        }
        for i in 0..self.n {
            out[i] = Bits(rows[self.lab[i] as usize]).fold(0, |r, w| r | bit(pos[w] as usize));
        }
    }
}

/// Result of a full canonical labeling.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<Vertex>,
    /// Adjacency rows of the canonical graph.
    pub rows: Vec<u64>,
    /// Smallest vertex of each vertex's automorphism orbit.
    pub orbits: Vec<Vertex>,
    /// Generators of the automorphism group found during the search.
    pub generators: Vec<Vec<Vertex>>,
}

impl Labeling {
    pub fn canonical_graph(&self) -> Graph {
        Graph::from_rows_unchecked(&self.rows)
    }

    /// `relabeling[v]` is the canonical position of vertex `v`.
    pub fn relabeling(&self) -> Vec<Vertex> {
        let mut r = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            r[v] = i;
        }
        r
    }

    pub fn same_orbit(&self, u: Vertex, v: Vertex) -> bool {
        self.orbits[u] == self.orbits[v]
    }

    /// Upper triangle of the canonical matrix packed into a word (graph6 bit order).
    /// Only meaningful for `n <= 11`.
    pub fn packed(&self) -> u64 {
        let mut key = 0u64;
        for (j, &row) in self.rows.iter().enumerate() {
            key |= (row & ((1u64 << j) - 1)) << (j * j.saturating_sub(1) / 2);
        }
        key
    }
}

/// Reusable labeling workspace.
#[derive(Default)]
pub struct Canonizer {
    n: usize,
    first_lab: Vec<u8>,
    first_rows: Vec<u64>,
    best_lab: Vec<u8>,
    best_rows: Vec<u64>,
    leaf: Vec<u64>,
    have_leaf: bool,
    generators: Vec<[u8; N]>,
    prefix: Vec<u8>,
}

impl Canonizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Equitable refinement of the unit partition. Its cells are ordered by
    /// an isomorphism-invariant rule, so the last cell is an invariant vertex
    /// set (contained in the maximum-degree vertices).
    pub(crate) fn root_partition(&self, rows: &[u64]) -> Partition {
        let mut p = Partition::unit(rows.len());
        p.refine(rows, 1);
        p
    }

    pub fn label(&mut self, rows: &[u64]) -> Labeling {
        let root = self.root_partition(rows);
        self.label_from_root(rows, root)
    }

    pub(crate) fn label_from_root(&mut self, rows: &[u64], root: Partition) -> Labeling {
        let n = rows.len();
        self.n = n;
        self.have_leaf = false;
        self.generators.clear();
        self.prefix.clear();
        self.first_rows.resize(n, 0);
        self.best_rows.resize(n, 0);
        self.leaf.resize(n, 0);
        self.search(rows, &root);

        let mut uf: Vec<usize> = (0..n).collect();
        for g in &self.generators {
            for v in 0..n {
                union(&mut uf, v, g[v] as usize);
            }
        }
        let orbits = (0..n).map(|v| find(&mut uf, v)).collect();
        Labeling {
            order: self.best_lab.iter().map(|&v| v as usize).collect(),
            rows: self.best_rows.clone(),
            orbits,
            generators: self
                .generators
                .iter()
                .map(|g| g[..n].iter().map(|&v| v as usize).collect())
                .collect(),
        }
    }

    fn search(&mut self, rows: &[u64], part: &Partition) {
        let Some(s) = part.first_nonsingleton() else {
            self.visit_leaf(rows, part);
            return;
        };
        let e = part.cend[s] as usize;
        let mut cell = [0u8; N];
        let cell = &mut cell[..e - s];
        cell.copy_from_slice(&part.lab[s..e]);
        cell.sort_unstable();

        let mut explored = 0u64;
        let mut uf = [0u8; N];
        let mut gens_seen = usize::MAX;
        for &w in cell.iter() {
            if explored != 0 {
                if gens_seen != self.generators.len() {
                    self.stabilizer_orbits(&mut uf);
                    gens_seen = self.generators.len();
                }
                let root = uf_find(&mut uf, w);
                if Bits(explored).any(|x| uf_find(&mut uf, x as u8) == root) {
                    continue;
                }
            }
            let mut child = part.clone();
            let single = child.individualize(w);
            child.refine(rows, bit(single));
            self.prefix.push(w);
            self.search(rows, &child);
            self.prefix.pop();
            explored |= bit(w as usize);
        }
    }

    /// Orbits of the group generated by the known automorphisms that fix the
    /// current prefix pointwise.
    fn stabilizer_orbits(&self, uf: &mut [u8; N]) {
        for (v, slot) in uf.iter_mut().enumerate().take(self.n) {
            *slot = v as u8;
        }
        for g in &self.generators {
            if self.prefix.iter().all(|&p| g[p as usize] == p) {
                for v in 0..self.n {
                    let (a, b) = (uf_find(uf, v as u8), uf_find(uf, g[v]));
                    if a != b {
                        uf[a.max(b) as usize] = a.min(b);
                    }
                }
            }
        }
    }

    fn visit_leaf(&mut self, rows: &[u64], part: &Partition) {
        let n = self.n;
        let mut leaf = std::mem::take(&mut self.leaf);
        part.leaf_rows(rows, &mut leaf);
        if !self.have_leaf {
            self.have_leaf = true;
            self.first_rows.copy_from_slice(&leaf);
            self.best_rows.copy_from_slice(&leaf);
            self.first_lab = part.lab[..n].to_vec();
            self.best_lab = self.first_lab.clone();
        } else if leaf == self.first_rows {
            self.record_automorphism(true, &part.lab[..n]);
        } else {
            match leaf.as_slice().cmp(&self.best_rows) {
                std::cmp::Ordering::Equal => self.record_automorphism(false, &part.lab[..n]),
                std::cmp::Ordering::Greater => {
                    self.best_rows.copy_from_slice(&leaf);
                    self.best_lab.copy_from_slice(&part.lab[..n]);
                }
                std::cmp::Ordering::Less => {}
            }
        }
        self.leaf = leaf;
    }

    fn record_automorphism(&mut self, against_first: bool, lab: &[u8]) {
        let reference = if against_first {
            &self.first_lab
        } else {
            &self.best_lab
        };
        let mut g = [0u8; N];
        for (i, &v) in reference.iter().enumerate() {
            g[v as usize] = lab[i];
        }
        if (0..self.n).any(|v| g[v] as usize != v) {
            self.generators.push(g);
        }
    }
}

fn uf_find(uf: &mut [u8; N], mut v: u8) -> u8 {
    while uf[v as usize] != v {
        let p = uf[v as usize];
        uf[v as usize] = uf[p as usize];
        v = p;
    }
    v
}

fn find(uf: &mut [usize], mut v: usize) -> usize {
    while uf[v] != v {
        uf[v] = uf[uf[v]];
        v = uf[v];
    }
    v
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (a, b) = (find(uf, a), find(uf, b));
    if a != b {
        uf[a.max(b)] = a.min(b);
    }
}

/// Canonical graph6 string together with the vertex relabeling that produces it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub graph6: String,
    /// `relabeling[v]` is the canonical position of vertex `v`.
    pub relabeling: Vec<Vertex>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = Canonizer::new().label(g.rows());
    CanonicalForm {
        graph6: to_graph6(&lab.canonical_graph()),
        relabeling: lab.relabeling(),
    }
}

/// Canonical graph6 string only.
pub fn canonical_graph6(g: &Graph) -> String {
    canonical_form(g).graph6
}

/// Automorphism orbits, as the smallest vertex of each vertex's orbit.
pub fn automorphism_orbits(g: &Graph) -> Vec<Vertex> {
    Canonizer::new().label(g.rows()).orbits
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_graph6(a) == canonical_graph6(b)
}
