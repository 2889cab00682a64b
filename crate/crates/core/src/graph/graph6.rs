//! graph6 encoding, single-byte size header only.
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per
//! byte (most significant first), zero padded, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_MAX_ORDER: usize = 62;

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            max: GRAPH6_MAX_ORDER,
        });
    }
    let nbits = n * (n - 1) / 2;
    let mut out = String::with_capacity(1 + nbits.div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses one graph6 record. A single trailing line ending is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .strip_suffix('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| bad("empty input"))?;
    if !(63..=126).contains(&head) {
        return Err(bad(format!("header byte {head} outside 63..=126")));
    }
    if head == 126 {
        return Err(bad(format!(
            "multi-byte size headers (n > {GRAPH6_MAX_ORDER}) are not supported"
        )));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(bad("graph has no vertices"));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(bad(format!(
            "truncated: expected {expected} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(bad(format!(
            "{} trailing bytes after the adjacency data",
            body.len() - expected
        )));
    }
    let mut values = Vec::with_capacity(expected);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(bad(format!("data byte {b} outside 63..=126")));
        }
        values.push(b - 63);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    while k < expected * 6 {
        if bit(k) {
            return Err(bad("non-zero padding bits"));
        }
        k += 1;
    }
    Graph::new(n, &edges)
}

/// One graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, ConnectedGraphs};
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        assert_eq!(write_graph6(&complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::new(1, &[]).unwrap()).unwrap(), "@");
        // K4: six ones -> 63 + 63.
        assert_eq!(write_graph6(&complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(write_graph6(&cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(parse_graph6("A_\n").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("Dhc").unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph6("A").is_err());
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A__").is_err());
        assert!(parse_graph6("~?@").is_err());
        assert!(parse_graph6("A\x10").is_err());
        // K2 has one data bit; the other five must be zero.
        assert!(parse_graph6("A`").is_err());
        let big = complete(63).unwrap();
        assert!(write_graph6(&big).is_err());
    }

    #[test]
    fn every_small_connected_graph_round_trips() {
        for n in 2..=6 {
            for g in ConnectedGraphs::new(n).unwrap() {
                assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
            }
        }
        let (k, _) = complete_bipartite(30, 32).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&k).unwrap()).unwrap(), k);
    }

    #[test]
    fn multi_line_input() {
        let gs = parse_graph6_lines("A_\n\nDhc\r\n").unwrap();
        assert_eq!(gs.len(), 2);
    }

    proptest! {
        #[test]
        fn random_graphs_round_trip(n in 1usize..=62, seed in any::<u64>(), density in 0.0f64..1.0) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if (state % 1000) as f64 / 1000.0 < density {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let text = write_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&text).unwrap(), g);
        }
    }
}
