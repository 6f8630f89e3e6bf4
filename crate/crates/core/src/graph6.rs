//! graph6 codec, bit-exact per the public format definition: upper-triangle
//! adjacency bits in column order (0,1),(0,2),(1,2),(0,3),... packed into
//! 6-bit groups, each offset by 63.

use crate::graph::{Graph, ParseError};

fn err(offset: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Encodes the vertex count: one byte for n <= 62, otherwise 126 followed by
/// three 6-bit digits (n <= 258047).
fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 supports n <= 258047 here");
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut acc: u8 = 0;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        acc <<= 6 - bits;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end().as_bytes();
    // Optional ">>graph6<<" header.
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(err(0, "truncated order"));
        }
        if bytes[1] == 126 {
            return Err(err(0, "graphs beyond 258047 vertices unsupported"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(err(1 + i, format!("byte {b} out of graph6 range")));
            }
            n = (n << 6) | (b as usize - 63);
        }
        (n, 4)
    } else {
        let b = bytes[0];
        if !(63..=126).contains(&b) {
            return Err(err(0, format!("byte {b} out of graph6 range")));
        }
        ((b - 63) as usize, 1)
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let needed = total_bits.div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(err(
            pos,
            format!(
                "expected {needed} data bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut cur = 0u8;
    let mut remaining = 0u8;
    for v in 1..n {
        for u in 0..v {
            if remaining == 0 {
                let b = bytes[pos];
                if !(63..=126).contains(&b) {
                    return Err(err(pos, format!("byte {b} out of graph6 range")));
                }
                cur = b - 63;
                remaining = 6;
                pos += 1;
            }
            let bit = (cur >> (remaining - 1)) & 1;
            remaining -= 1;
            bit_index += 1;
            if bit == 1 {
                edges.push((u, v));
            }
        }
    }
    let _ = bit_index;
    // Padding bits must be zero.
    if remaining > 0 && cur & ((1 << remaining) - 1) != 0 {
        return Err(err(pos - 1, "nonzero padding bits"));
    }
    Graph::new(n, edges).map_err(|e| err(pos, format!("invalid graph: {e}")))
}

/// Serde helper embedding a `Graph` as its graph6 string.
pub mod serde_graph6 {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(g))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, k35, k5_minus_e, Graph};

    #[test]
    fn k4_constant() {
        // Hand-packed: n=4 -> 'C'; bits for (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) are
        // 111111 -> 63 + 63 = 126 = '~'.
        assert_eq!(to_graph6(&complete(4)), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
    }

    #[test]
    fn c5_constant() {
        // C5 edges (0,1),(1,2),(2,3),(3,4),(0,4) give column-order bits
        // 1 01 001 1001, i.e. groups 101001 and 100100 after padding:
        // 41+63='h', 36+63='c'.
        let g = cycle(5);
        let enc = to_graph6(&g);
        assert_eq!(enc.as_bytes()[0], 63 + 5);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
        assert_eq!(enc, "Dhc");
    }

    #[test]
    fn named_graphs_round_trip() {
        for g in [k5_minus_e(), k35(), complete(6), Graph::empty(7)] {
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn header_prefix_accepted() {
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), complete(4));
    }

    #[test]
    fn long_form_order() {
        let g = Graph::empty(63);
        let enc = to_graph6(&g);
        assert_eq!(enc.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err()); // missing data bytes
        assert!(parse_graph6("C~~").is_err()); // extra data
        let bad = String::from_utf8(vec![63 + 4, 10]).unwrap();
        assert!(parse_graph6(&bad).is_err()); // data byte out of range
    }
}
