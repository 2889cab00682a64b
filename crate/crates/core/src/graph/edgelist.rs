//! Plain edge-list text: an `n m` header followed by `m` lines `u v`,
//! 0-indexed, whitespace separated.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::EdgeList(format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| Error::EdgeList(format!("{what}: {tok:?} is not a vertex count/id")))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let u = next(&format!("edge {i} first endpoint"))?;
        let v = next(&format!("edge {i} second endpoint"))?;
        edges.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(Error::EdgeList(format!("more than the declared {m} edges")));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn parse_and_write() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let c = cycle(6).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&c)).unwrap(), c);
    }

    #[test]
    fn errors() {
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
        assert!(matches!(
            parse_edge_list("2 1\n0 2\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
    }
}
