//! graph6 codec: the printable ASCII interchange format for undirected
//! graphs.
//!
//! Layout: a vertex-count header N(n) followed by the upper adjacency
//! triangle packed column by column, bits b(0,1), b(0,2), b(1,2),
//! b(0,3), …, six bits per byte, each byte offset by 63 into the
//! printable range. The empty graph is `?` and K_2 is `A_`.

use std::fmt;

use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_HEADER: u8 = 126; // '~'
/// Largest vertex count expressible in the 4-byte header form.
const MAX_LONG_N: usize = 258_047;

/// Malformed graph6 input; offsets are byte positions in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// Input ended before the header or bit body was complete.
    Truncated { expected: usize, actual: usize },
    /// A byte outside the printable graph6 range 63..=126.
    InvalidByte { offset: usize, byte: u8 },
    /// More bytes than the vertex count calls for.
    TrailingData { offset: usize },
    /// Padding bits after the triangle were not zero.
    NonzeroPadding { offset: usize },
    /// The 8-byte header form (n > 258047) is not supported.
    UnsupportedLength { offset: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Graph6Error::Truncated { expected, actual } => {
                write!(f, "truncated graph6 string: expected {expected} bytes, got {actual}")
            }
            Graph6Error::InvalidByte { offset, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at offset {offset}")
            }
            Graph6Error::TrailingData { offset } => {
                write!(f, "trailing data after graph body at offset {offset}")
            }
            Graph6Error::NonzeroPadding { offset } => {
                write!(f, "nonzero padding bits in final byte at offset {offset}")
            }
            Graph6Error::UnsupportedLength { offset } => {
                write!(f, "unsupported 8-byte vertex count header at offset {offset}")
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

/// Encode a graph as a graph6 string.
///
/// Panics if the graph has more than 258047 vertices, beyond which the
/// format needs the unsupported 8-byte header.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_LONG_N, "graph too large for the supported graph6 headers");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_HEADER);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decode a graph6 string.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_HEADER).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Truncated { expected: 1, actual: 0 });
    }
    let (n, body_start) = if bytes[0] == LONG_HEADER {
        if bytes.len() >= 2 && bytes[1] == LONG_HEADER {
            return Err(Graph6Error::UnsupportedLength { offset: 1 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, actual: bytes.len() });
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };
    let triangle_bits = n * n.saturating_sub(1) / 2;
    let body_len = triangle_bits.div_ceil(6);
    let expected = body_start + body_len;
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated { expected, actual: bytes.len() });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData { offset: expected });
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[body_start + bit_index / 6] - OFFSET;
            if byte >> (5 - bit_index % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit_index += 1;
        }
    }
    // Any leftover bits in the final byte must be zero padding.
    while bit_index % 6 != 0 {
        let byte = bytes[body_start + bit_index / 6] - OFFSET;
        if byte >> (5 - bit_index % 6) & 1 == 1 {
            return Err(Graph6Error::NonzeroPadding { offset: body_start + bit_index / 6 });
        }
        bit_index += 1;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn anchors() {
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::complete(3)), "Bw");
        assert_eq!(decode("?").unwrap().n(), 0);
        let k2 = decode("A_").unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(decode(""), Err(Graph6Error::Truncated { expected: 1, actual: 0 }));
        assert_eq!(decode("A"), Err(Graph6Error::Truncated { expected: 2, actual: 1 }));
        assert_eq!(decode("A_?"), Err(Graph6Error::TrailingData { offset: 2 }));
        assert_eq!(decode("A "), Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' }));
        // K_2's single bit is 100000; flipping a padding bit must fail.
        let padded = String::from_utf8(vec![b'A', 32 + 1 + OFFSET]).unwrap();
        assert_eq!(decode(&padded), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        assert_eq!(decode("~~????"), Err(Graph6Error::UnsupportedLength { offset: 1 }));
    }

    #[test]
    fn long_header_round_trip() {
        let mut g = Graph::empty(70);
        g.add_edge(0, 69);
        g.add_edge(33, 64);
        let text = encode(&g);
        assert_eq!(text.as_bytes()[0], b'~');
        assert_eq!(decode(&text).unwrap(), g);
    }

    #[test]
    fn random_round_trip_on_30_vertices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6A7);
        for _ in 0..1000 {
            let mut g = Graph::empty(30);
            for u in 0..30 {
                for v in u + 1..30 {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}
