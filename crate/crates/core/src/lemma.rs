//! Constructive long paths through a set of high-degree vertices.
//!
//! Given vertices `b_1..b_t` (`2 <= t <= k`) of degree at least `D`, where
//! `2D >= n + 2k + 2`, and two further vertices `x`, `y` of degree at least
//! `n - D + t + 4`, consecutive vertices in `x, b_1, ..., b_t, y` share many
//! neighbors. Picking one fresh common neighbor `a_i` between each
//! consecutive pair gives an `x`-`y` path of length `2t + 2`. An edge
//! `b_1 b_2` replaces the connector `a_2` (length `2t + 1`); an edge `a_2 a_2'`
//! between `N(b_1)` and `N(b_2)` replaces it by two connectors (length `2t + 3`).
//!
//! Connectors are chosen greedily, lowest index first, ends before interior.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::paths::{check_path, PathWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum LemmaCase {
    /// Plain path, length `2t + 2`.
    A,
    /// An edge inside `B`, length `2t + 1`.
    B { edge: (Vertex, Vertex) },
    /// `pair` indexes into `B`; `cross` is an edge from `N(b_i)` to `N(b_j)`.
    /// Length `2t + 3`.
    C {
        pair: (usize, usize),
        cross: (Vertex, Vertex),
    },
}

impl LemmaCase {
    pub fn letter(&self) -> char {
        match self {
            LemmaCase::A => 'a',
            LemmaCase::B { .. } => 'b',
            LemmaCase::C { .. } => 'c',
        }
    }

    /// Lowest edge `(u, v)`, `u < v`, with both ends in `b`.
    pub fn find_b(g: &Graph, b: &[Vertex]) -> Option<LemmaCase> {
        let set = b.iter().fold(0u64, |m, &v| m | bit(v));
        g.edges()
            .find(|&(u, v)| set & bit(u) != 0 && set & bit(v) != 0)
            .map(|edge| LemmaCase::B { edge })
    }

    /// Lowest `(i, j)` and then lowest cross edge `(a, a')` with `a` in
    /// `N(b_i)`, `a'` in `N(b_j)`, both outside `B + {x, y}`.
    pub fn find_c(g: &Graph, b: &[Vertex], x: Vertex, y: Vertex) -> Option<LemmaCase> {
        let forbidden = b.iter().fold(bit(x) | bit(y), |m, &v| m | bit(v));
        for i in 0..b.len() {
            for j in 0..b.len() {
                if i == j {
                    continue;
                }
                let ni = g.neighbors(b[i]) & !forbidden;
                let nj = g.neighbors(b[j]) & !forbidden;
                for a in Bits(ni) {
                    if let Some(a2) = Bits(g.neighbors(a) & nj).next() {
                        return Some(LemmaCase::C {
                            pair: (i, j),
                            cross: (a, a2),
                        });
                    }
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaInstance {
    pub graph: Graph,
    pub b: Vec<Vertex>,
    pub x: Vertex,
    pub y: Vertex,
    pub d: usize,
    pub k: usize,
    #[serde(flatten)]
    pub case: LemmaCase,
}

/// First hypothesis that an instance fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Validation {
    Valid,
    /// `t = |B|` outside `2..=k`.
    SetSize { t: usize, k: usize },
    VertexOutOfRange { vertex: Vertex },
    DuplicateInB { vertex: Vertex },
    /// Some `b` has degree below `D`.
    LowDegreeInB { vertex: Vertex, degree: usize, d: usize },
    /// `D < n/2 + k + 1`.
    Threshold { d: usize, n: usize, k: usize },
    EndpointInB { vertex: Vertex },
    EndpointsEqual,
    /// `x` or `y` has degree below `n - D + t + 4`.
    LowDegreeEndpoint { vertex: Vertex, degree: usize, required: usize },
    /// Case b: the stored edge is missing or leaves `B`.
    NoEdgeInB,
    /// Case c: the stored pair or cross edge does not fit.
    NoCrossEdge,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }
}

pub fn validate_instance(inst: &LemmaInstance) -> Validation {
    let g = &inst.graph;
    let n = g.n();
    let t = inst.b.len();
    if t < 2 || t > inst.k {
        return Validation::SetSize { t, k: inst.k };
    }
    let mut bset = 0u64;
    for &v in inst.b.iter().chain([&inst.x, &inst.y]) {
        if v >= n {
            return Validation::VertexOutOfRange { vertex: v };
        }
    }
    for &v in &inst.b {
        if bset & bit(v) != 0 {
            return Validation::DuplicateInB { vertex: v };
        }
        bset |= bit(v);
    }
    for &v in &inst.b {
        if g.degree(v) < inst.d {
            return Validation::LowDegreeInB {
                vertex: v,
                degree: g.degree(v),
                d: inst.d,
            };
        }
    }
    if 2 * inst.d < n + 2 * inst.k + 2 {
        return Validation::Threshold { d: inst.d, n, k: inst.k };
    }
    for v in [inst.x, inst.y] {
        if bset & bit(v) != 0 {
            return Validation::EndpointInB { vertex: v };
        }
    }
    if inst.x == inst.y {
        return Validation::EndpointsEqual;
    }
    // D <= n - 1 here since deg(b) >= D, so the subtraction is safe.
    let required = n - inst.d + t + 4;
    for v in [inst.x, inst.y] {
        if g.degree(v) < required {
            return Validation::LowDegreeEndpoint {
                vertex: v,
                degree: g.degree(v),
                required,
            };
        }
    }
    match inst.case {
        LemmaCase::A => {}
        LemmaCase::B { edge: (u, v) } => {
            if u >= n || v >= n || bset & bit(u) == 0 || bset & bit(v) == 0 || !g.has_edge(u, v) {
                return Validation::NoEdgeInB;
            }
        }
        LemmaCase::C {
            pair: (i, j),
            cross: (a, a2),
        } => {
            let forbidden = bset | bit(inst.x) | bit(inst.y);
            let fits = i < t
                && j < t
                && i != j
                && a < n
                && a2 < n
                && g.has_edge(a, a2)
                && forbidden & (bit(a) | bit(a2)) == 0
                && g.has_edge(inst.b[i], a)
                && g.has_edge(inst.b[j], a2);
            if !fits {
                return Validation::NoCrossEdge;
            }
        }
    }
    Validation::Valid
}

/// Output of [`build_path`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaPath {
    pub case: char,
    pub length: usize,
    pub witness: PathWitness,
    /// `B` in the order used for the path (the special pair moved to the front
    /// in cases b and c).
    pub b_order: Vec<Vertex>,
    /// Connectors `a_1..a_{t+1}` in path order; in case b `a_2` is absent, in
    /// case c `a_2` and `a_2'` both appear.
    pub connectors: Vec<Vertex>,
}

fn pick(candidates: u64, step: usize) -> Result<Vertex> {
    Bits(candidates)
        .next()
        .ok_or(Error::ConstructionFailure { step })
}

pub fn build_path(inst: &LemmaInstance) -> Result<LemmaPath> {
    let verdict = validate_instance(inst);
    if !verdict.is_valid() {
        return Err(Error::Hypothesis(format!("{verdict:?}")));
    }
    let g = &inst.graph;
    let t = inst.b.len();

    let mut b = inst.b.clone();
    let front = match inst.case {
        LemmaCase::A => None,
        LemmaCase::B { edge: (u, v) } => Some((u, v)),
        LemmaCase::C { pair: (i, j), .. } => Some((inst.b[i], inst.b[j])),
    };
    if let Some((u, v)) = front {
        b.retain(|&w| w != u && w != v);
        b.splice(0..0, [u, v]);
    }

    let mut used = b.iter().fold(bit(inst.x) | bit(inst.y), |m, &v| m | bit(v));
    if let LemmaCase::C { cross: (a, a2), .. } = inst.case {
        used |= bit(a) | bit(a2);
    }
    let common = |p: Vertex, q: Vertex| g.neighbors(p) & g.neighbors(q);

    // a[i] joins chain[i] and chain[i + 1] where chain = x, b_1, ..., b_t, y.
    let mut a = vec![usize::MAX; t + 1];
    a[0] = pick(common(inst.x, b[0]) & !used, 1)?;
    used |= bit(a[0]);
    a[t] = pick(common(b[t - 1], inst.y) & !used, t + 1)?;
    used |= bit(a[t]);
    // the connector between b_1 and b_2 is replaced in cases b and c
    let first_interior = if matches!(inst.case, LemmaCase::A) { 1 } else { 2 };
    for i in first_interior..t {
        a[i] = pick(common(b[i - 1], b[i]) & !used, i + 1)?;
        used |= bit(a[i]);
    }

    let mut path = vec![inst.x, a[0], b[0]];
    let mut connectors = vec![a[0]];
    match inst.case {
        LemmaCase::A => {
            path.extend([a[1], b[1]]);
            connectors.push(a[1]);
        }
        LemmaCase::B { .. } => path.push(b[1]),
        LemmaCase::C { cross: (c1, c2), .. } => {
            path.extend([c1, c2, b[1]]);
            connectors.extend([c1, c2]);
        }
    }
    for i in 2..t {
        path.extend([a[i], b[i]]);
        connectors.push(a[i]);
    }
    path.extend([a[t], inst.y]);
    connectors.push(a[t]);

    let length = match inst.case {
        LemmaCase::A => 2 * t + 2,
        LemmaCase::B { .. } => 2 * t + 1,
        LemmaCase::C { .. } => 2 * t + 3,
    };
    let witness = PathWitness::new(path);
    if let Some(defect) = check_path(g, &witness, length) {
        return Err(Error::Hypothesis(format!(
            "assembled path is not a simple path of length {length}: {defect:?}"
        )));
    }
    Ok(LemmaPath {
        case: inst.case.letter(),
        length,
        witness,
        b_order: b,
        connectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::complete_bipartite;

    fn k8(case: LemmaCase, d: usize) -> LemmaInstance {
        LemmaInstance {
            graph: Graph::complete(8).unwrap(),
            b: vec![0, 1],
            x: 2,
            y: 3,
            d,
            k: 2,
            case,
        }
    }

    #[test]
    fn k8_validation() {
        assert_eq!(validate_instance(&k8(LemmaCase::A, 7)), Validation::Valid);
        assert_eq!(
            validate_instance(&k8(LemmaCase::A, 6)),
            Validation::Threshold { d: 6, n: 8, k: 2 }
        );
    }

    #[test]
    fn k8_all_cases() {
        let p = build_path(&k8(LemmaCase::A, 7)).unwrap();
        assert_eq!(p.length, 6);
        assert_eq!(p.witness.vertices, vec![2, 4, 0, 6, 1, 5, 3]);

        let p = build_path(&k8(LemmaCase::B { edge: (0, 1) }, 7)).unwrap();
        assert_eq!(p.witness.length, 5);

        let c = LemmaCase::find_c(&Graph::complete(8).unwrap(), &[0, 1], 2, 3).unwrap();
        assert_eq!(c, LemmaCase::C { pair: (0, 1), cross: (4, 5) });
        let p = build_path(&k8(c, 7)).unwrap();
        assert_eq!(p.witness.length, 7);
        assert_eq!(p.connectors.len(), 4);
    }

    #[test]
    fn k45_low_degree() {
        let g = complete_bipartite(4, 5).unwrap();
        let inst = LemmaInstance {
            graph: g,
            b: vec![0, 1],
            x: 4,
            y: 5,
            d: 7,
            k: 2,
            case: LemmaCase::A,
        };
        assert!(matches!(
            validate_instance(&inst),
            Validation::LowDegreeInB { vertex: 0, degree: 5, d: 7 }
        ));
        assert!(matches!(build_path(&inst), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn case_b_reorders_b() {
        let inst = LemmaInstance {
            graph: Graph::complete(12).unwrap(),
            b: vec![0, 1, 2],
            x: 3,
            y: 4,
            d: 11,
            k: 3,
            case: LemmaCase::B { edge: (1, 2) },
        };
        let p = build_path(&inst).unwrap();
        assert_eq!(p.b_order, vec![1, 2, 0]);
        assert_eq!(p.length, 7);
    }

    #[test]
    fn rejects_bad_structure() {
        let mut inst = k8(LemmaCase::A, 7);
        inst.b = vec![0];
        assert!(matches!(validate_instance(&inst), Validation::SetSize { .. }));
        let mut inst = k8(LemmaCase::A, 7);
        inst.y = 1;
        assert_eq!(validate_instance(&inst), Validation::EndpointInB { vertex: 1 });
        let mut inst = k8(LemmaCase::A, 7);
        inst.y = 2;
        assert_eq!(validate_instance(&inst), Validation::EndpointsEqual);
        let inst = k8(LemmaCase::C { pair: (0, 1), cross: (2, 5) }, 7);
        assert_eq!(validate_instance(&inst), Validation::NoCrossEdge);
    }
}
