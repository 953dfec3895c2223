//! Isomorph-free generation by canonical vertex augmentation.
//!
//! A child of `G` (on `m` vertices) is `G` plus a vertex `m` joined to a
//! subset `S`. The child is accepted only if the new vertex lies in the
//! automorphism orbit of the child's canonical deletion vertex: the vertex of
//! the last cell of the root equitable partition (a set of maximum-degree
//! vertices) that comes first in canonical order. Every isomorphism class then
//! has exactly one parent class. Children of one parent that are equivalent
//! under `Aut(G)` are removed by hashing canonical forms, which is only needed
//! when `Aut(G)` is nontrivial.

use std::collections::HashSet;

use crate::bits::{bit, deposit, low_mask, next_combination, Bits};
use crate::canon::Canonizer;

pub(crate) const MAX_GEN: usize = 16;

/// Compact graph used inside the generator.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Node {
    pub n: usize,
    pub edges: usize,
    pub rows: [u64; MAX_GEN],
}

impl Node {
    pub fn single() -> Self {
        Node {
            n: 1,
            edges: 0,
            rows: [0; MAX_GEN],
        }
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.n]
    }
}

/// Most edges that vertices `from..to` can add (vertex `j` has at most `j`
/// neighbors among earlier vertices).
pub(crate) fn max_added(from: usize, to: usize) -> usize {
    (from..to).sum()
}

#[derive(Default)]
pub(crate) struct Augmenter {
    canon: Canonizer,
    seen: HashSet<u64>,
}

impl Augmenter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Calls `out` on every accepted child whose edge count is at least
    /// `min_edges`.
    pub fn children(&mut self, g: &Node, min_edges: usize, mut out: impl FnMut(&Node)) {
        let m = g.n;
        debug_assert!(m < MAX_GEN);
        let rows = g.rows();
        let aut_trivial = m <= 1 || self.canon.label(rows).generators.is_empty();
        self.seen.clear();

        let mut maxdeg = 0;
        let mut at_least = [0u64; MAX_GEN + 1];
        for (v, r) in rows.iter().enumerate() {
            let d = r.count_ones() as usize;
            maxdeg = maxdeg.max(d);
            for s in 0..=d {
                at_least[s] |= bit(v);
            }
        }
        let lo = maxdeg.max(min_edges.saturating_sub(g.edges));
        let mut slots = [0u8; MAX_GEN];
        for s in lo..=m {
            // the new vertex must have maximum degree: members of S need
            // degree < s, non-members degree <= s (guaranteed by s >= maxdeg)
            let allowed = low_mask(m) & !at_least[s];
            let k = allowed.count_ones() as usize;
            if k < s {
                continue;
            }
            for (i, v) in Bits(allowed).enumerate() {
                slots[i] = v as u8;
            }
            let mut combo = low_mask(s);
            loop {
                let subset = deposit(combo, &slots[..k]);
                self.try_child(g, subset, s, aut_trivial, &mut out);
                match next_combination(combo) {
                    Some(c) if c < bit(k) => combo = c,
                    _ => break,
                }
            }
        }
    }

    #[inline]
    fn try_child(&mut self, g: &Node, subset: u64, s: usize, aut_trivial: bool, out: &mut impl FnMut(&Node)) {
        let m = g.n;
        let mut child = *g;
        child.n = m + 1;
        child.edges = g.edges + s;
        for u in Bits(subset) {
            child.rows[u] |= bit(m);
        }
        child.rows[m] = subset;
        let rows = child.rows();

        let root = self.canon.root_partition(rows);
        let last = root.last_cell();
        if last & bit(m) == 0 {
            return;
        }
        if last == bit(m) && aut_trivial {
            out(&child);
            return;
        }
        let lab = self.canon.label_from_root(rows, root);
        if last != bit(m) {
            let c = *lab.order.iter().find(|&&v| last & bit(v) != 0).unwrap();
            if !lab.same_orbit(c, m) {
                return;
            }
        }
        if !aut_trivial && !self.seen.insert(lab.packed()) {
            return;
        }
        out(&child);
    }
}

/// Depth-first walk of the augmentation tree from `g` down to `target`
/// vertices. `min_edges` returns the current edge threshold for complete
/// graphs; subtrees that cannot reach it are cut.
pub(crate) fn descend(
    aug: &mut Augmenter,
    g: &Node,
    target: usize,
    min_edges: &dyn Fn() -> usize,
    leaf: &mut dyn FnMut(&Node),
) {
    if g.n == target {
        leaf(g);
        return;
    }
    let need = min_edges().saturating_sub(max_added(g.n + 1, target));
    let mut kids = Vec::new();
    aug.children(g, need, |c| kids.push(*c));
    for c in &kids {
        descend(aug, c, target, min_edges, leaf);
    }
}

/// All accepted nodes at depth `level`, in generation order.
pub(crate) fn level_nodes(level: usize, target: usize, min_edges: usize) -> Vec<Node> {
    let mut out = Vec::new();
    let mut aug = Augmenter::new();
    let threshold = || min_edges.saturating_sub(max_added(level, target));
    descend(&mut aug, &Node::single(), level, &threshold, &mut |g| out.push(*g));
    out
}
