//! The graph6 interchange format.
//!
//! A header encoding `n` (one byte `n + 63` when `n <= 62`, otherwise `~`
//! followed by three bytes holding an 18-bit value) and then the upper
//! triangle of the adjacency matrix in column-major order,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte with an
//! offset of 63 and zero padding.

use crate::bits::bit;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(row & bit(i) != 0);
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, format!("byte {:#04x} outside 63..=126", bytes[pos])));
    }
    let (n, body_start) = match bytes {
        [] => return Err(err(0, "empty input")),
        [126, 126, ..] => return Err(err(1, format!("vertex count exceeds {MAX_VERTICES}"))),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(bytes.len(), "truncated vertex-count header"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(err(0, format!("vertex count {n} outside 1..={MAX_VERTICES}")));
    }
    let nbits = n * (n - 1) / 2;
    let body_len = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < body_len {
        return Err(err(bytes.len(), format!("truncated body: expected {body_len} bytes")));
    }
    if body.len() > body_len {
        return Err(err(body_start + body_len, "trailing bytes after adjacency data"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[body_len - 1] - 63;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(err(body_start + body_len - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        let k2 = from_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
    }

    #[test]
    fn five_vertex_round_trip() {
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        // bits after the header: 000000 111100 -> edges x(0,4), x(1,4), x(2,4), x(3,4)
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn petgraph_reference_string() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn long_header_for_63_and_64() {
        for n in [63, 64] {
            let mut g = Graph::empty(n).unwrap();
            g.add_edge(0, n - 1).unwrap();
            g.add_edge(5, 17).unwrap();
            let s = to_graph6(&g);
            assert!(s.starts_with('~'));
            assert_eq!(from_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn errors_carry_offsets() {
        let cases: &[(&str, usize)] = &[
            ("", 0),
            ("?", 0),
            ("D?", 2),
            ("D?{?", 3),
            ("B\n", 1),
            ("Bx", 1),
            ("~~", 1),
            ("~?", 2),
        ];
        for &(s, offset) in cases {
            match from_graph6(s) {
                Err(Error::Graph6 { offset: o, .. }) => assert_eq!(o, offset, "input {s:?}"),
                other => panic!("input {s:?}: expected graph6 error, got {other:?}"),
            }
        }
    }
}
