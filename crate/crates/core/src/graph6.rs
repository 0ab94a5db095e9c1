//! Short-form graph6 codec (orders 0 through 62).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column-major order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per byte (most significant first), each byte offset by 63, with the last
//! byte zero-padded.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order representable in the one-byte length header.
pub const MAX_SHORT_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} is outside the printable range 63..=126")]
    ByteOutOfRange { pos: usize, byte: u8 },
    #[error("long-form graph6 (order > {max}) is not supported", max = MAX_SHORT_ORDER)]
    LongForm,
    #[error("graph6 body has {found} bytes but order {order} needs {expected}")]
    Length {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the final graph6 byte")]
    Padding,
    #[error("order {0} cannot be encoded in short-form graph6")]
    Unsupported(usize),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 word. Leading/trailing whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if let Some((pos, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::ByteOutOfRange { pos, byte });
    }
    if head == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (head - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            order: n,
            expected,
            found: body.len(),
        });
    }
    let mut g = Graph::empty(n).expect("short-form order is within range");
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[k / 6] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    Ok(g)
}

/// Encodes `g` as a short-form graph6 word.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let bytes = emit_graph6_bytes(g)?;
    Ok(String::from_utf8(bytes).expect("graph6 is printable ASCII"))
}

pub(crate) fn emit_graph6_bytes(g: &Graph) -> Result<Vec<u8>, Graph6Error> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Graph6Error::Unsupported(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let rows = g.rows();
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for row in &rows[..j] {
            acc = acc << 1 | (row >> j & 1) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(out)
}

/// Parses a file body: one graph per line, skipping blank lines and `>>` headers.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| is_graph_line(l))
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}

/// True for lines that carry a graph (not blank, not a `>>` header).
pub fn is_graph_line(line: &str) -> bool {
    let t = line.trim();
    !t.is_empty() && !t.starts_with(">>")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Bit-by-bit encoder written straight from the format description,
    /// independent of `emit_graph6`: build the bit vector, pad, chunk.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        let has = |i: usize, j: usize| edges.contains(&(i, j)) || edges.contains(&(j, i));
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(has(i, j) as u8);
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(0);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| a * 2 + b);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn reference_oracle_values() {
        let k4: Vec<_> = (0..4).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        assert_eq!(reference_encode(4, &k4), "C~");
        assert_eq!(reference_encode(4, &[(0, 1), (1, 2), (2, 3)]), "Ch");
        assert_eq!(
            reference_encode(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            "Dhc"
        );
        assert_eq!(reference_encode(0, &[]), "?");
    }

    #[test]
    fn parse_known_words() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_graph6("Ch").unwrap(), Graph::path(4).unwrap());
        assert_eq!(parse_graph6("Dhc").unwrap(), Graph::cycle(5).unwrap());
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn emit_known_words() {
        assert_eq!(emit_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(emit_graph6(&Graph::cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(
            emit_graph6(&Graph::empty(63).unwrap()),
            Err(Graph6Error::Unsupported(63))
        );
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(
            parse_graph6("C\u{7f}"),
            Err(Graph6Error::ByteOutOfRange { pos: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("C~~"),
            Err(Graph6Error::Length { order: 4, expected: 1, found: 2 })
        ));
        // K4 uses all 6 bits of its single body byte; order 3 uses 3 bits.
        assert_eq!(parse_graph6("B\u{7e}"), Err(Graph6Error::Padding));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::LongForm));
    }

    #[test]
    fn agrees_with_reference_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.gen_range(0..=20);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.4) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(emit_graph6(&g).unwrap(), reference_encode(n, &edges));
        }
    }

    #[test]
    fn file_lines_skip_headers() {
        let gs = parse_graph6_lines(">>graph6<<\nC~\n\nDhc\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(parse_graph6_lines("C~\nC").unwrap_err().0, 2);
    }

    proptest::proptest! {
        #[test]
        fn round_trip(n in 0usize..=30, seed in proptest::prelude::any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n).unwrap();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(0.5) {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            let s = emit_graph6(&g).unwrap();
            proptest::prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
