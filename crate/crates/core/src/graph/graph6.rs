//! graph6 encoding, restricted to graphs with at most 64 vertices.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let body = text[start..].trim_end().as_bytes();
    let at = |k: usize| start + k;
    if body.is_empty() {
        return Err(Error::parse(at(0), "empty input"));
    }
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(at(k), format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let (n, mut pos) = if body[0] == 126 {
        if body.len() < 4 {
            return Err(Error::parse(at(body.len()), "truncated vertex count"));
        }
        if body[1] == 126 {
            return Err(Error::parse(at(1), "vertex counts above 258047 are unsupported"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    } else {
        ((body[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Error::parse(at(0), "graph has no vertices"));
    }
    if n > MAX_VERTICES {
        return Err(Error::parse(
            at(0),
            format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
        ));
    }
    let pairs = n * (n - 1) / 2;
    let need = pairs.div_ceil(6);
    let have = body.len() - pos;
    if have < need {
        return Err(Error::parse(
            at(body.len()),
            format!("expected {need} data bytes, found {have}"),
        ));
    }
    if have > need {
        return Err(Error::parse(at(pos + need), "trailing data"));
    }
    let mut rows = vec![0u64; n];
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if bit == pairs {
                break 'outer;
            }
            let byte = body[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    pos += need;
    if pairs % 6 != 0 {
        let last = body[pos - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(at(pos - 1), "nonzero padding bits"));
        }
    }
    Graph::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        let k3 = Graph::build(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(encode(&k3), "Bw");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(encode(&c5), "Dhc");
        assert_eq!(decode("Dhc").unwrap(), c5);
    }

    #[test]
    fn round_trips_large_orders() {
        for n in [1usize, 2, 7, 62, 63, 64] {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            let g = Graph::build(n, &edges).unwrap();
            let s = encode(&g);
            if n >= 63 {
                assert!(s.starts_with('~'));
            }
            assert_eq!(decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn accepts_header_and_newline() {
        assert_eq!(decode(">>graph6<<Bw\n").unwrap().edge_count(), 3);
    }

    #[test]
    fn reports_offsets() {
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("?"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("B"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode("Bww"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(decode("B "), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode("~???"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("B\u{1}"), Err(Error::Parse { offset: 1, .. })));
    }
}
