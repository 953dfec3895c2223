//! Brute-force oracles that share no code with the library algorithms.

#![allow(dead_code)]

use pathdeg_core::Graph;

/// Adjacency matrix as nested booleans.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Every permutation of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Upper triangle of the relabeled matrix read column by column as a bit string.
fn key_under(m: &[Vec<bool>], perm: &[usize]) -> Vec<bool> {
    let n = m.len();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut key = Vec::with_capacity(n * n / 2);
    for j in 1..n {
        for i in 0..j {
            key.push(m[inv[i]][inv[j]]);
        }
    }
    key
}

/// Lexicographically largest upper-triangle string over all labelings.
pub fn brute_canonical_key(g: &Graph) -> Vec<bool> {
    let m = matrix(g);
    permutations(g.n())
        .iter()
        .map(|p| key_under(&m, p))
        .max()
        .unwrap()
}

/// All automorphisms as permutations.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let m = matrix(g);
    let n = g.n();
    permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|u| (0..n).all(|v| m[u][v] == m[p[u]][p[v]])))
        .collect()
}

/// Orbit representative (smallest member) of every vertex.
pub fn brute_orbits(g: &Graph) -> Vec<usize> {
    let auts = automorphisms(g);
    (0..g.n())
        .map(|v| auts.iter().map(|p| p[v]).min().unwrap())
        .collect()
}

/// Graph whose edge set is given by the bits of `mask` over pairs `(i, j)`,
/// `i < j`, in row order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// Every simple path with `ell` edges, as vertex lists.
pub fn all_paths(g: &Graph, ell: usize) -> Vec<Vec<usize>> {
    fn extend(m: &[Vec<bool>], path: &mut Vec<usize>, ell: usize, out: &mut Vec<Vec<usize>>) {
        if path.len() == ell + 1 {
            out.push(path.clone());
            return;
        }
        let last = *path.last().unwrap();
        for w in 0..m.len() {
            if m[last][w] && !path.contains(&w) {
                path.push(w);
                extend(m, path, ell, out);
                path.pop();
            }
        }
    }
    let m = matrix(g);
    let mut out = Vec::new();
    for s in 0..g.n() {
        extend(&m, &mut vec![s], ell, &mut out);
    }
    out
}

/// Whether some length-`ell` path joins two vertices of equal degree.
pub fn naive_violates(g: &Graph, ell: usize) -> bool {
    all_paths(g, ell)
        .iter()
        .any(|p| g.degree(p[0]) == g.degree(p[ell]))
}

/// graph6 encoder written from the format description, one bit per char.
pub fn naive_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while bits.len() % 6 != 0 {
        bits.push('0');
    }
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((v + 63) as char);
    }
    out
}
