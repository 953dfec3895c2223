//! Exact evaluation of the edge-count bounds from the upper-bound argument.
//!
//! Every quantity here is an integer or a rational; nothing is rounded.
//! The `O(n)` terms of the argument are replaced by explicit constants,
//! derived in `docs/bounds.md`:
//!
//! * degree-sum sum with distinct degrees (even case 2):
//!   `2e <= n^2/2 + (k+1) n + (k^2+k+4)/2`
//! * odd case 1: `2e <= n^2/2 + (5k+15)/2 n + (k+3)(k+5)`
//! * whole even argument (`ell = 2k`, `k >= 3`):
//!   `e <= n^2/4 + C n + C0` with `C = max(3k-1, 2k+2)/4`, `C0 = (k^2+k+4)/4`.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bits::{bit, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::graph6::to_graph6;

pub type Rational = Ratio<i64>;

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn frac(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

/// Serializes rationals as `"p"` or `"p/q"`.
pub mod ratio_str {
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|e| D::Error::custom(format!("bad rational {s:?}: {e:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `quantity <= bound`
    AtMost,
    /// `quantity >= bound`
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub inputs: BTreeMap<String, Value>,
    /// What is being bounded, e.g. `2e(G)` or `|X|`.
    pub bounded: String,
    #[serde(with = "ratio_str")]
    pub quantity: Rational,
    pub relation: Relation,
    #[serde(with = "ratio_str")]
    pub bound: Rational,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl BoundReport {
    fn new(
        name: &str,
        inputs: Value,
        bounded: &str,
        quantity: Rational,
        relation: Relation,
        bound: Rational,
    ) -> Self {
        let holds = match relation {
            Relation::AtMost => quantity <= bound,
            Relation::AtLeast => quantity >= bound,
        };
        let inputs = match inputs {
            Value::Object(m) => m.into_iter().collect(),
            _ => BTreeMap::new(),
        };
        BoundReport {
            name: name.to_string(),
            inputs,
            bounded: bounded.to_string(),
            quantity,
            relation,
            bound,
            holds,
            details: BTreeMap::new(),
        }
    }

    fn detail(mut self, key: &str, value: Value) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnownKind {
    Exact,
    LowerBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownValue {
    pub kind: KnownKind,
    pub value: u64,
}

/// Values of `p_ell(n)` fixed by prior results: `p_3(2m+1) = m^2+m` (m >= 2),
/// `p_3(2m) = m^2-1` (m >= 3), `p_2(2m) = m(m+1)/2`, and the half-graph lower
/// bound `m(m+1)/2` for even `ell >= 4` and `n = 2m`.
pub fn known_values(ell: usize, n: usize) -> Option<KnownValue> {
    let m = (n / 2) as u64;
    let exact = |value| Some(KnownValue { kind: KnownKind::Exact, value });
    match (ell, n % 2) {
        (3, 1) if n >= 5 => exact(m * m + m),
        (3, 0) if n >= 6 => exact(m * m - 1),
        (2, 0) if n >= 2 => exact(m * (m + 1) / 2),
        (e, 0) if e >= 4 && e % 2 == 0 && n >= 2 => Some(KnownValue {
            kind: KnownKind::LowerBound,
            value: m * (m + 1) / 2,
        }),
        _ => None,
    }
}

/// `sum_{i=lo}^{hi} i`, zero when the range is empty.
pub fn range_sum(lo: i64, hi: i64) -> i64 {
    if lo > hi {
        0
    } else {
        (lo + hi) * (hi - lo + 1) / 2
    }
}

/// `C(m, 2)` for any integer `m` (the polynomial `m(m-1)/2`).
pub fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// Even case 1: all but `k-2` vertices have degree at most `n/2 + k`, so
/// `2e <= (k-2)n + (n-k+2)(n/2+k) <= n^2/2 + 3kn/2`.
pub fn even_case1_bound(n: usize, k: usize) -> Result<BoundReport> {
    if k < 1 || n < 2 * k {
        return Err(Error::arg(format!("need k >= 1 and n >= 2k, got n = {n}, k = {k}")));
    }
    let (ni, ki) = (n as i64, k as i64);
    let middle = r((ki - 2) * ni) + r(ni - ki + 2) * (frac(ni, 2) + r(ki));
    let relaxed = frac(ni * ni, 2) + frac(3 * ki * ni, 2);
    Ok(BoundReport::new(
        "even-case1",
        json!({ "n": n, "k": k }),
        "(k-2)n + (n-k+2)(n/2+k)",
        middle,
        Relation::AtMost,
        relaxed,
    ))
}

/// Explicit constant form of the distinct-degree sum: `n^2/2 + (k+1)n + (k^2+k+4)/2`.
pub fn edge_sum_explicit(n: i64, k: i64) -> Rational {
    frac(n * n, 2) + r((k + 1) * n) + frac(k * k + k + 4, 2)
}

/// Degree sum when the `k-1` largest degrees are at least `Delta >= n/2 + k + 1`
/// and no two vertices of degree at least `L = n - Delta + k + 3` share a degree.
/// Evaluated both as the three-term sum and in binomial form; the two must agree.
pub fn edge_sum_bound(n: usize, k: usize, delta: usize) -> Result<BoundReport> {
    if 2 * delta < n + 2 * k + 2 || delta > n {
        return Err(Error::arg(format!(
            "Delta must satisfy n/2 + k + 1 <= Delta <= n, got n = {n}, k = {k}, Delta = {delta}"
        )));
    }
    let (n, k, d) = (n as i64, k as i64, delta as i64);
    let low = n - d + k + 3;
    let three_term = (k - 1) * n + range_sum(low, d) + (n - (d - low) + 1) * (low - 1);
    let binomial = (k - 1) * n + choose2(d + 1) - choose2(low) + (2 * n - 2 * d + k + 4) * (n - d + k + 2);
    Ok(BoundReport::new(
        "edge-sum",
        json!({ "n": n, "k": k, "delta": d }),
        "2e(G)",
        r(three_term),
        Relation::AtMost,
        edge_sum_explicit(n, k),
    )
    .detail("binomial_form", json!(binomial))
    .detail("identity", json!(three_term == binomial)))
}

pub fn odd_case1_explicit(n: i64, k: i64) -> Rational {
    frac(n * n, 2) + frac((5 * k + 15) * n, 2) + r((k + 3) * (k + 5))
}

/// Odd case 1: `(k+2)n + sum_{i=n-Delta+k+4}^{Delta} i + (n - (Delta - (n-Delta+k+4)) + 1)(n-Delta+k+3)`.
pub fn odd_case1_bound(n: usize, k: usize, delta: usize) -> Result<BoundReport> {
    if 2 * delta < n || delta > n {
        return Err(Error::arg(format!(
            "Delta must satisfy n/2 <= Delta <= n, got n = {n}, Delta = {delta}"
        )));
    }
    let (n, k, d) = (n as i64, k as i64, delta as i64);
    let low = n - d + k + 4;
    let value = (k + 2) * n + range_sum(low, d) + (n - (d - low) + 1) * (low - 1);
    Ok(BoundReport::new(
        "odd-case1",
        json!({ "n": n, "k": k, "delta": d }),
        "2e(G)",
        r(value),
        Relation::AtMost,
        odd_case1_explicit(n, k),
    ))
}

/// Upper bound on `e(G)` for graphs avoiding `ell = 2k` (`k >= 3`), obtained by
/// evaluating every case of the even-length argument exactly and taking the
/// worst one. Returns `None` for `k < 3`, where the argument does not apply.
pub fn even_proof_bound(n: usize, k: usize) -> Option<u64> {
    if k < 3 {
        return None;
    }
    let (ni, ki) = (n as i64, k as i64);
    // case 1: the (k-1)-th largest degree is below n/2 + k + 1
    let delta1 = (ni + 1) / 2 + ki;
    let mut worst = (ki - 2) * ni + (ni - ki + 2) * delta1;
    // case 2, for every admissible value of the (k-1)-th largest degree
    let first = (ni + 2 * ki + 2 + 1) / 2;
    for d in first..=ni {
        let low = ni - d + ki + 3;
        let spread = (ki - 1) * ni + range_sum(low, d) + (ni - (d - low) + 1) * (low - 1);
        let single = ki * ni + (ni - ki) * (low - 1);
        worst = worst.max(spread).max(single);
    }
    Some((worst.max(0) / 2) as u64)
}

/// `n^2/4 + C n` with `C = max(3k-1, 2k+2)/4`, the explicit-constant form of
/// the quarter-density bound for `ell = 2k`.
pub fn quarter_reference(n: usize, k: usize) -> Rational {
    let (n, k) = (n as i64, k as i64);
    frac(n * n, 4) + frac((3 * k - 1).max(2 * k + 2) * n, 4)
}

/// The additive constant `C0 = (k^2+k+4)/4` accompanying [`quarter_reference`].
pub fn quarter_reference_constant(k: usize) -> Rational {
    let k = k as i64;
    frac(k * k + k + 4, 4)
}

/// Decomposition of `V(G)` around the high-degree set `B = {v : deg v >= D}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BPartition {
    pub d: usize,
    pub b: Vec<Vertex>,
    /// `N(B)`, the union of neighborhoods of `B`.
    pub nb: Vec<Vertex>,
    /// Vertices with at least two neighbors in `B`.
    pub x: Vec<Vertex>,
    /// `Y_v`: vertices whose only neighbor in `B` is `v`, listed per `v` in `B`.
    pub y: Vec<(Vertex, Vec<Vertex>)>,
    /// `V - (B + N(B))`.
    pub r: Vec<Vertex>,
    pub b_independent: bool,
    /// No edge joins `N(u)` and `N(w)` for distinct `u, w` in `B`.
    pub neighborhoods_separated: bool,
}

impl BPartition {
    /// Both structural hypotheses of the second odd case.
    pub fn hypotheses_hold(&self) -> bool {
        self.b_independent && self.neighborhoods_separated
    }
}

fn list(mask: u64) -> Vec<Vertex> {
    Bits(mask).collect()
}

pub fn bpartition(g: &Graph, d: usize) -> BPartition {
    let bmask = (0..g.n())
        .filter(|&v| g.degree(v) >= d)
        .fold(0u64, |m, v| m | bit(v));
    let nb = g.neighborhood(bmask);
    let mut x = 0u64;
    let mut y: Vec<(Vertex, u64)> = Bits(bmask).map(|v| (v, 0)).collect();
    for w in 0..g.n() {
        let hits = g.neighbors(w) & bmask;
        match hits.count_ones() {
            0 => {}
            1 => {
                let v = hits.trailing_zeros() as usize;
                let slot = y.iter_mut().find(|(u, _)| *u == v).unwrap();
                slot.1 |= bit(w);
            }
            _ => x |= bit(w),
        }
    }
    let r = g.vertex_mask() & !(bmask | nb);
    let b_independent = Bits(bmask).all(|v| g.neighbors(v) & bmask == 0);
    let bs: Vec<_> = Bits(bmask).collect();
    let neighborhoods_separated = bs.iter().enumerate().all(|(i, &u)| {
        bs[i + 1..].iter().all(|&w| {
            let (nu, nw) = (g.neighbors(u), g.neighbors(w));
            Bits(nu).all(|a| g.neighbors(a) & nw == 0)
        })
    });
    BPartition {
        d,
        b: bs,
        nb: list(nb),
        x: list(x),
        y: y.into_iter().map(|(v, m)| (v, list(m))).collect(),
        r: list(r),
        b_independent,
        neighborhoods_separated,
    }
}

fn require_hypotheses(p: &BPartition) -> Result<()> {
    if !p.b_independent {
        return Err(Error::Hypothesis("B is not an independent set".into()));
    }
    if !p.neighborhoods_separated {
        return Err(Error::Hypothesis(
            "an edge joins the neighborhoods of two distinct vertices of B".into(),
        ));
    }
    Ok(())
}

/// `|X| >= (|B|-2)/(|B|-1) * n/2` for graphs meeting the second odd case.
pub fn claim_x_check(g: &Graph, d: usize) -> Result<BoundReport> {
    let p = bpartition(g, d);
    require_hypotheses(&p)?;
    if p.b.len() < 2 {
        return Err(Error::Hypothesis(format!("|B| = {} < 2", p.b.len())));
    }
    if 2 * d < g.n() {
        return Err(Error::Hypothesis(format!("D = {d} < n/2 = {}/2", g.n())));
    }
    let nb = p.b.len() as i64;
    let bound = frac(nb - 2, nb - 1) * frac(g.n() as i64, 2);
    Ok(BoundReport::new(
        "claim-x",
        json!({ "graph": to_graph6(g), "d": d }),
        "|X|",
        r(p.x.len() as i64),
        Relation::AtLeast,
        bound,
    )
    .detail("b_size", json!(p.b.len())))
}

/// `e(G) <= |B||X| + sum_v (|Y_v| + C(|Y_v|, 2)) + D|R|` for graphs meeting
/// the second odd case.
pub fn structural_edge_bound(g: &Graph, d: usize) -> Result<BoundReport> {
    let p = bpartition(g, d);
    require_hypotheses(&p)?;
    let ys: i64 = p
        .y
        .iter()
        .map(|(_, yv)| {
            let s = yv.len() as i64;
            s + choose2(s)
        })
        .sum();
    let bound = (p.b.len() * p.x.len()) as i64 + ys + (d * p.r.len()) as i64;
    Ok(BoundReport::new(
        "structural",
        json!({ "graph": to_graph6(g), "d": d }),
        "e(G)",
        r(g.edge_count() as i64),
        Relation::AtMost,
        r(bound),
    )
    .detail("b_size", json!(p.b.len()))
    .detail("x_size", json!(p.x.len()))
    .detail("r_size", json!(p.r.len())))
}
