//! Brute force over all `2^(n(n-1)/2)` labeled graphs, one edge count at a time.

use rayon::prelude::*;

use crate::bits::{bit, low_mask, next_combination, Bits};
use crate::paths::rows_avoid;

use super::{canonical_of_rows, Partial};

/// Edge slots in graph6 order: slot `j(j-1)/2 + i` is the pair `(i, j)`.
fn slots(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub(super) fn search(n: usize, ell: usize) -> Partial {
    let pairs = slots(n);
    let m = pairs.len();
    let high = m.min(8);
    let low = m - high;
    let mut examined = 0;
    for e in (0..=m).rev() {
        let level = (0..1u64 << high)
            .into_par_iter()
            .filter(|p| p.count_ones() as usize <= e && e - p.count_ones() as usize <= low)
            .map(|prefix| scan(n, ell, &pairs, prefix << low, low, e - prefix.count_ones() as usize, e))
            .reduce(Partial::default, Partial::merge);
        examined += level.examined;
        if level.best.is_some() {
            return Partial { examined, ..level };
        }
    }
    unreachable!("the edgeless graph always avoids")
}

fn scan(n: usize, ell: usize, pairs: &[(usize, usize)], prefix: u64, low: usize, k: usize, e: usize) -> Partial {
    let mut part = Partial::default();
    let mut combo = low_mask(k);
    loop {
        let mask = prefix | combo;
        let mut rows = [0u64; 8];
        for b in Bits(mask) {
            let (i, j) = pairs[b];
            rows[i] |= bit(j);
            rows[j] |= bit(i);
        }
        part.examined += 1;
        if rows_avoid(&rows[..n], ell) {
            part.offer(e, || canonical_of_rows(&rows[..n]));
        }
        match next_combination(combo) {
            Some(c) if c < bit(low) => combo = c,
            _ => break,
        }
    }
    part
}
