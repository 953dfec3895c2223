//! Fixed-length simple paths between equal-degree vertices.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A simple path given by its vertex sequence; `length` counts edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub length: usize,
    pub vertices: Vec<Vertex>,
}

impl PathWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        PathWitness {
            length: vertices.len().saturating_sub(1),
            vertices,
        }
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }
}

/// Two equal-degree vertices joined by a path of the forbidden length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub ell: usize,
    pub endpoints: (Vertex, Vertex),
    pub witness: PathWitness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessDefect {
    BadLength,
    EndpointMismatch,
    RepeatedVertex,
    MissingEdge,
    DegreeMismatch,
}

fn check_range(g: &Graph, ell: usize) -> Result<()> {
    if ell == 0 || ell >= g.n() {
        return Err(Error::arg(format!(
            "path length must satisfy 1 <= ell < n = {}, got {ell}",
            g.n()
        )));
    }
    Ok(())
}

/// BFS distances to `target`; unreachable vertices get `usize::MAX`.
fn distances_to(g: &Graph, target: Vertex) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[target] = 0;
    let mut frontier = bit(target);
    let mut seen = frontier;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let next = g.neighborhood(frontier) & !seen;
        for v in Bits(next) {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// Lexicographically least simple `u`-`v` path with exactly `ell` edges, if any.
pub fn path_of_length(g: &Graph, u: Vertex, v: Vertex, ell: usize) -> Result<Option<PathWitness>> {
    check_range(g, ell)?;
    if u >= g.n() || v >= g.n() {
        return Err(Error::arg("endpoint out of range"));
    }
    if u == v {
        return Err(Error::arg("endpoints must be distinct"));
    }
    let dist = distances_to(g, v);
    if dist[u] > ell {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(ell + 1);
    path.push(u);
    if extend(g, &dist, v, ell, bit(u), &mut path) {
        Ok(Some(PathWitness::new(path)))
    } else {
        Ok(None)
    }
}

fn extend(g: &Graph, dist: &[usize], target: Vertex, left: usize, used: u64, path: &mut Vec<Vertex>) -> bool {
    let cur = *path.last().unwrap();
    if left == 1 {
        if g.has_edge(cur, target) {
            path.push(target);
            return true;
        }
        return false;
    }
    for w in Bits(g.neighbors(cur) & !used & !bit(target)) {
        if dist[w] > left - 1 {
            continue;
        }
        path.push(w);
        if extend(g, dist, target, left - 1, used | bit(w), path) {
            return true;
        }
        path.pop();
    }
    false
}

/// First equal-degree pair (in ascending lexicographic order) joined by a
/// path of length `ell`, with its least witness. `None` means `g` avoids `ell`.
pub fn find_violation(g: &Graph, ell: usize) -> Result<Option<Violation>> {
    check_range(g, ell)?;
    let deg = g.degrees();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if deg[u] != deg[v] {
                continue;
            }
            if let Some(witness) = path_of_length(g, u, v, ell)? {
                return Ok(Some(Violation {
                    ell,
                    endpoints: (u, v),
                    witness,
                }));
            }
        }
    }
    Ok(None)
}

/// Whether `g` has no two equal-degree vertices joined by a path of length
/// `ell`. Vacuously true when `ell >= n`.
pub fn avoids(g: &Graph, ell: usize) -> bool {
    ell >= g.n() || (ell > 0 && rows_avoid(g.rows(), ell))
}

/// Avoidance test on raw adjacency rows. One depth-bounded search per start
/// vertex, accepting any equal-degree endpoint of larger index.
pub fn rows_avoid(rows: &[u64], ell: usize) -> bool {
    let n = rows.len();
    if ell == 0 || ell >= n {
        return ell != 0;
    }
    let mut deg = [0u32; 64];
    for (d, r) in deg.iter_mut().zip(rows) {
        *d = r.count_ones();
    }
    for u in 0..n {
        let mut targets = 0u64;
        for v in u + 1..n {
            if deg[v] == deg[u] {
                targets |= bit(v);
            }
        }
        if targets != 0 && reaches(rows, u, bit(u), ell, targets) {
            return false;
        }
    }
    true
}

#[inline]
fn reaches(rows: &[u64], cur: usize, used: u64, left: usize, targets: u64) -> bool {
    let next = rows[cur] & !used;
    if left == 1 {
        return next & targets != 0;
    }
    for w in Bits(next) {
        if reaches(rows, w, used | bit(w), left - 1, targets) {
            return true;
        }
    }
    false
}

/// Outcome of [`verify_witness`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub valid: bool,
    pub defect: Option<WitnessDefect>,
}

impl WitnessCheck {
    fn fail(defect: WitnessDefect) -> Self {
        WitnessCheck {
            valid: false,
            defect: Some(defect),
        }
    }
}

/// Checks a simple path with `ell` edges inside `g`, ignoring endpoint degrees.
pub fn check_path(g: &Graph, witness: &PathWitness, ell: usize) -> Option<WitnessDefect> {
    let vs = &witness.vertices;
    if witness.length != ell || vs.len() != ell + 1 {
        return Some(WitnessDefect::BadLength);
    }
    let mut seen = 0u64;
    for &v in vs {
        if v >= g.n() {
            return Some(WitnessDefect::MissingEdge);
        }
        if seen & bit(v) != 0 {
            return Some(WitnessDefect::RepeatedVertex);
        }
        seen |= bit(v);
    }
    if vs.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Some(WitnessDefect::MissingEdge);
    }
    None
}

/// Independent validation of a reported violation.
pub fn verify_witness(g: &Graph, viol: &Violation, ell: usize) -> WitnessCheck {
    if let Some(d) = check_path(g, &viol.witness, ell) {
        return WitnessCheck::fail(d);
    }
    let (a, b) = viol.endpoints;
    if viol.witness.start() != a || viol.witness.end() != b {
        return WitnessCheck::fail(WitnessDefect::EndpointMismatch);
    }
    if g.degree(a) != g.degree(b) {
        return WitnessCheck::fail(WitnessDefect::DegreeMismatch);
    }
    WitnessCheck {
        valid: true,
        defect: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complete_bipartite;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn triangle_length_two() {
        let k3 = Graph::complete(3).unwrap();
        let p = path_of_length(&k3, 0, 1, 2).unwrap().unwrap();
        assert_eq!(p.vertices, vec![0, 2, 1]);
    }

    #[test]
    fn path_graph_p4() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path_of_length(&p4, 0, 3, 3).unwrap().unwrap().vertices, vec![0, 1, 2, 3]);
        assert_eq!(path_of_length(&p4, 0, 3, 2).unwrap(), None);
    }

    #[test]
    fn k23_same_side_has_no_length_three_path() {
        let g = complete_bipartite(2, 3).unwrap();
        assert_eq!(path_of_length(&g, 2, 3, 3).unwrap(), None);
        assert_eq!(path_of_length(&g, 0, 1, 3).unwrap(), None);
        assert!(find_violation(&g, 3).unwrap().is_none());
    }

    #[test]
    fn c4_violation_and_witness() {
        let v = find_violation(&c4(), 3).unwrap().unwrap();
        assert_eq!(v.endpoints, (0, 1));
        assert_eq!(v.witness.vertices, vec![0, 3, 2, 1]);
        assert!(verify_witness(&c4(), &v, 3).valid);
        assert!(!rows_avoid(c4().rows(), 3));
    }

    #[test]
    fn argument_errors() {
        let g = c4();
        assert!(path_of_length(&g, 1, 1, 2).is_err());
        assert!(path_of_length(&g, 0, 1, 0).is_err());
        assert!(path_of_length(&g, 0, 1, 4).is_err());
        assert!(find_violation(&g, 4).is_err());
    }

    #[test]
    fn witness_defects() {
        let g = c4();
        let mut v = find_violation(&g, 3).unwrap().unwrap();
        v.witness.vertices = vec![0, 3, 0, 1];
        assert_eq!(verify_witness(&g, &v, 3).defect, Some(WitnessDefect::RepeatedVertex));
        v.witness.vertices = vec![0, 2, 3, 1];
        assert_eq!(verify_witness(&g, &v, 3).defect, Some(WitnessDefect::MissingEdge));
        assert_eq!(verify_witness(&g, &v, 2).defect, Some(WitnessDefect::BadLength));

        // path 0-1-2-3 with an extra pendant at 1: degrees of 0 and 2 are 1 and 2
        let h = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let bad = Violation {
            ell: 2,
            endpoints: (0, 2),
            witness: PathWitness::new(vec![0, 1, 2]),
        };
        assert_eq!(verify_witness(&h, &bad, 2).defect, Some(WitnessDefect::DegreeMismatch));
    }

    #[test]
    fn ell_one_means_no_edge_between_equal_degrees() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(avoids(&star, 1));
        assert!(!avoids(&Graph::complete(3).unwrap(), 1));
    }
}
