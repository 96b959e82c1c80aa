//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix, column by column, packed six bits per printable byte.

use crate::graph::{Graph, GraphError, Vertex};

const HEADER: &str = ">>graph6<<";
const MAX_VERTICES: usize = 68_719_476_735;

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::ParseError(msg.into())
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes into graph6 bytes (no header, no newline).
pub fn encode_bytes(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let nbrs = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | nbrs.binary_search(&i).is_ok() as u8;
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
    out
}

pub fn encode(g: &Graph) -> String {
    // graph6 bytes are always printable ASCII
    String::from_utf8(encode_bytes(g)).expect("graph6 output is ASCII")
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8]), GraphError> {
    let value = |b: &[u8]| {
        b.iter()
            .fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize)
    };
    match bytes {
        [] => Err(err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated size field"));
            }
            Ok((value(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated size field"));
            }
            Ok((value(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

/// Decodes one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {bad:#04x} outside the graph6 range")));
    }
    let (n, body) = decode_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(err("vertex count too large"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if (body[expected - 1] - 63) & pad_mask != 0 {
            return Err(err("non-zero padding bits"));
        }
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_k4() {
        let g = decode("C~").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(encode(&g), "C~");
    }

    #[test]
    fn known_small_graphs() {
        // 5 vertices, edges 0-2 0-4 1-3 3-4 (matches the petgraph fixture)
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(decode("A_").unwrap().edge_count(), 1);
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(decode(">>graph6<<C~\n").unwrap().edge_count(), 6);
    }

    #[test]
    fn malformed() {
        assert!(matches!(decode(""), Err(GraphError::ParseError(_))));
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C\u{7f}").is_err());
        assert!(decode("A`").is_err(), "padding bit set");
        assert!(decode("~?").is_err());
    }

    #[test]
    fn long_form_round_trip() {
        let n = 70;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }
}
