//! Reader and writer for the graph6 text format.
//!
//! One record encodes one graph: a length field N(n), then the upper
//! triangle of the adjacency matrix in column order
//! (0,1),(0,2),(1,2),(0,3),... packed into 6-bit groups, each offset by 63.
//! An optional `>>graph6<<` header is accepted and stripped on input and
//! never written on output.

use crate::graph::Graph;
use thiserror::Error;

const HEADER: &[u8] = b">>graph6<<";

/// Largest order the parser will materialize. The 8-byte length form can
/// name graphs far beyond what fits in memory; anything bigger than this is
/// rejected up front.
const MAX_ORDER: usize = 1 << 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("malformed length prefix at offset {0}: record truncated")]
    TruncatedLength(usize),
    #[error("graph order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(u64),
    #[error("record ends at offset {offset}: expected {expected} adjacency bytes, found {found}")]
    TruncatedBits {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("trailing garbage at offset {0}")]
    TrailingGarbage(usize),
}

fn bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Parses a single graph6 record. Surrounding ASCII whitespace and an
/// optional header are tolerated; anything else past the record is an error.
pub fn parse_graph6(record: &[u8]) -> Result<Graph, Graph6Error> {
    let mut data = record;
    // strip whitespace and optional header, keeping offsets into the original
    let mut base = 0usize;
    while data.first().is_some_and(|b| b.is_ascii_whitespace()) {
        data = &data[1..];
        base += 1;
    }
    if data.starts_with(HEADER) {
        data = &data[HEADER.len()..];
        base += HEADER.len();
    }
    while data.last().is_some_and(|b| b.is_ascii_whitespace()) {
        data = &data[..data.len() - 1];
    }
    if data.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange {
                offset: base + i,
                byte: b,
            });
        }
    }

    // length field
    let (n, mut pos) = if data[0] != 126 {
        ((data[0] - 63) as u64, 1)
    } else if data.len() >= 2 && data[1] != 126 {
        if data.len() < 4 {
            return Err(Graph6Error::TruncatedLength(base + data.len()));
        }
        let n = data[1..4]
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | (b - 63) as u64);
        (n, 4)
    } else {
        if data.len() < 8 {
            return Err(Graph6Error::TruncatedLength(base + data.len()));
        }
        let n = data[2..8]
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | (b - 63) as u64);
        (n, 8)
    };
    if n > MAX_ORDER as u64 {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let n = n as usize;

    let nbits = bit_count(n);
    let nbytes = nbits.div_ceil(6);
    let found = data.len() - pos;
    if found < nbytes {
        return Err(Graph6Error::TruncatedBits {
            offset: base + data.len(),
            expected: nbytes,
            found,
        });
    }
    if found > nbytes {
        return Err(Graph6Error::TrailingGarbage(base + pos + nbytes));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = data[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 != 0 {
                g.add_edge(row, col);
            }
            bit += 1;
        }
    }
    pos += nbytes; // consumed exactly
    let _ = pos;
    Ok(g)
}

/// Encodes one graph as a graph6 record (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut cur = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            cur <<= 1;
            if g.has_edge(row, col) {
                cur |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(cur + 63);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((cur << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_graph, petersen};

    /// Reference decoder written directly from the published format note,
    /// independent of `parse_graph6`: short length form only, returns the
    /// edge list in bit order.
    fn reference_decode_short(record: &str) -> (usize, Vec<(usize, usize)>) {
        let bytes: Vec<u8> = record.bytes().map(|b| b - 63).collect();
        let n = bytes[0] as usize;
        let mut bits = Vec::new();
        for &b in &bytes[1..] {
            for k in (0..6).rev() {
                bits.push(b >> k & 1 == 1);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for col in 1..n {
            for row in 0..col {
                if bits[idx] {
                    edges.push((row, col));
                }
                idx += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn reference_agreement_on_examples() {
        // "D?{": n=5, bit stream 000000 111100 -> the star at vertex 4.
        let (n, edges) = reference_decode_short("D?{");
        assert_eq!(n, 5);
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), edges);
        assert_eq!(write_graph6(&g), "D?{");

        // "C~" is K4.
        let (n, edges) = reference_decode_short("C~");
        assert_eq!((n, edges.len()), (4, 6));
        let g = parse_graph6(b"C~").unwrap();
        assert_eq!(g, crate::graph::Graph::complete(4));
        assert_eq!(write_graph6(&g), "C~");

        // "@" is the one-vertex graph.
        let g = parse_graph6(b"@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(write_graph6(&g), "@");
    }

    #[test]
    fn format_note_worked_example() {
        // n=5 with edges 02, 04, 13, 34 encodes as "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6(b"DQc").unwrap(), g);
    }

    #[test]
    fn header_and_whitespace() {
        let g = parse_graph6(b">>graph6<<C~\n").unwrap();
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn named_graphs_round_trip() {
        for g in [petersen(), cycle_graph(8), Graph::complete(4), Graph::empty(0)] {
            let enc = write_graph6(&g);
            let back = parse_graph6(enc.as_bytes()).unwrap();
            assert_eq!(back, g);
            assert_eq!(write_graph6(&back), enc);
        }
    }

    #[test]
    fn long_form_round_trip() {
        let mut g = Graph::empty(100);
        for v in 1..100 {
            g.add_edge(0, v);
        }
        let enc = write_graph6(&g);
        assert_eq!(enc.as_bytes()[0], 126);
        assert_eq!(parse_graph6(enc.as_bytes()).unwrap(), g);
    }

    #[test]
    fn parse_errors_name_offsets() {
        assert_eq!(
            parse_graph6(b"C\x1f"),
            Err(Graph6Error::ByteOutOfRange { offset: 1, byte: 0x1f })
        );
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6(b"C~~"),
            Err(Graph6Error::TrailingGarbage(2))
        );
        assert!(matches!(
            parse_graph6(b"D?"),
            Err(Graph6Error::TruncatedBits { .. })
        ));
        assert!(matches!(
            parse_graph6(b"~?"),
            Err(Graph6Error::TruncatedLength(_))
        ));
    }
}
