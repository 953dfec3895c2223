//! Seeded random generators for graphs and for instances that satisfy the
//! hypotheses of the path builder and of the high-degree partition bounds.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits::{bit, Bits};
use crate::bounds::bpartition;
use crate::graph::{Graph, Vertex};
use crate::lemma::{validate_instance, LemmaCase, LemmaInstance};

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("vertex count in range");
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A uniformly random relabeling of `g`.
pub fn shuffled<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<Vertex> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

fn raise_degree<R: Rng + ?Sized>(rng: &mut R, g: &mut Graph, v: Vertex, target: usize) {
    let mut free: Vec<Vertex> = (0..g.n()).filter(|&u| u != v && !g.has_edge(u, v)).collect();
    free.shuffle(rng);
    let mut free = free.into_iter();
    while g.degree(v) < target {
        let u = free.next().expect("target degree below n");
        g.add_edge(u, v).unwrap();
    }
}

/// Which kind of path the generated instance asks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaKind {
    A,
    B,
    C,
}

/// A valid [`LemmaInstance`] on 16 to 32 vertices: a random base graph with
/// degrees of the planted `B`, `x`, `y` raised to the required thresholds, plus
/// an edge inside `B` (kind b) or a cross edge between two neighborhoods
/// (kind c) when none exists yet.
pub fn lemma_instance<R: Rng + ?Sized>(rng: &mut R, kind: LemmaKind) -> LemmaInstance {
    loop {
        let n = rng.gen_range(16..=32);
        let k = rng.gen_range(2..=((n - 4) / 2).min(6));
        let t = rng.gen_range(2..=k);
        let dmin = (n + 2 * k + 3) / 2;
        if dmin > n - 1 {
            continue;
        }
        let d = rng.gen_range(dmin..=(dmin + 2).min(n - 1));
        let required = n - d + t + 4;
        if required > n - 1 {
            continue;
        }
        let mut order: Vec<Vertex> = (0..n).collect();
        order.shuffle(rng);
        let b = order[..t].to_vec();
        let (x, y) = (order[t], order[t + 1]);

        let density = rng.gen_range(0.1..0.6);
        let mut g = random_graph(rng, n, density);
        for &v in &b {
            raise_degree(rng, &mut g, v, d);
        }
        raise_degree(rng, &mut g, x, required);
        raise_degree(rng, &mut g, y, required);

        let case = match kind {
            LemmaKind::A => LemmaCase::A,
            LemmaKind::B => {
                if LemmaCase::find_b(&g, &b).is_none() {
                    g.add_edge(b[0], b[1]).unwrap();
                }
                LemmaCase::find_b(&g, &b).unwrap()
            }
            LemmaKind::C => {
                if LemmaCase::find_c(&g, &b, x, y).is_none() {
                    let forbidden = b.iter().fold(bit(x) | bit(y), |m, &v| m | bit(v));
                    let left: Vec<_> = Bits(g.neighbors(b[0]) & !forbidden).collect();
                    let a = *left.choose(rng).unwrap();
                    let right: Vec<_> = Bits(g.neighbors(b[1]) & !forbidden & !bit(a)).collect();
                    let a2 = *right.choose(rng).unwrap();
                    g.add_edge(a, a2).unwrap();
                }
                LemmaCase::find_c(&g, &b, x, y).unwrap()
            }
        };
        let inst = LemmaInstance {
            graph: g,
            b,
            x,
            y,
            d,
            k,
            case,
        };
        debug_assert!(validate_instance(&inst).is_valid());
        return inst;
    }
}

/// A graph with an independent high-degree set `B = {v : deg v >= D}` whose
/// neighborhoods are joined by no edge, together with `D`. Vertices outside
/// `B` fall into `X` (several neighbors in `B`), the blocks `Y_v` (one
/// neighbor), and `R` (none); edges are added inside each `Y_v` and between
/// `R` and everything outside `B`. Labels are shuffled.
pub fn conforming_partition_graph<R: Rng + ?Sized>(rng: &mut R) -> (Graph, usize) {
    loop {
        let n: usize = rng.gen_range(12..=40);
        let nb = rng.gen_range(2..=5);
        let half = n.div_ceil(2);
        let d = rng.gen_range(half..=half + 3);
        if d > n - nb {
            continue;
        }
        let xsize = rng.gen_range(0..=n - nb);
        let mut g = Graph::empty(n).unwrap();
        let bs: Vec<Vertex> = (0..nb).collect();
        let xs: Vec<Vertex> = (nb..nb + xsize).collect();
        for &w in &xs {
            let mut pick = bs.clone();
            pick.shuffle(rng);
            for (i, &v) in pick.iter().enumerate() {
                if i < 2 || rng.gen_bool(0.7) {
                    g.add_edge(v, w).unwrap();
                }
            }
        }
        let mut next = nb + xsize;
        let mut blocks = Vec::new();
        let mut fits = true;
        for &v in &bs {
            let size = d.saturating_sub(g.degree(v)) + rng.gen_range(0..=2);
            if next + size > n {
                fits = false;
                break;
            }
            let block: Vec<Vertex> = (next..next + size).collect();
            next += size;
            for &w in &block {
                g.add_edge(v, w).unwrap();
            }
            blocks.push(block);
        }
        if !fits {
            continue;
        }
        let py = rng.gen_range(0.0..0.5);
        for block in &blocks {
            for (i, &u) in block.iter().enumerate() {
                for &w in &block[i + 1..] {
                    if rng.gen_bool(py) {
                        g.add_edge(u, w).unwrap();
                    }
                }
            }
        }
        let pr = rng.gen_range(0.0..0.4);
        for r in next..n {
            for u in nb..r {
                if rng.gen_bool(pr) {
                    g.add_edge(u, r).unwrap();
                }
            }
        }
        if (nb..n).any(|v| g.degree(v) >= d) {
            continue;
        }
        let g = shuffled(rng, &g);
        let p = bpartition(&g, d);
        debug_assert!(p.hypotheses_hold() && p.b.len() == nb);
        return (g, d);
    }
}
