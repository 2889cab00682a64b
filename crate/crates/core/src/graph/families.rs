//! Generators for the graph families used by the bound checks.

use super::{Graph, PartiteSplit};
use crate::error::{Error, Result};

fn size_error(msg: impl Into<String>) -> Error {
    Error::InvalidSize(msg.into())
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

pub fn empty_graph(n: usize) -> Result<Graph> {
    Graph::new(n, &[])
}

/// `K_{a,b}` with side `0..a` and side `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<(Graph, PartiteSplit)> {
    if a == 0 || b == 0 {
        return Err(size_error(format!(
            "K_{{{a},{b}}} needs two non-empty sides"
        )));
    }
    let g = empty_graph(a)?.join(&empty_graph(b)?);
    let split = PartiteSplit {
        side_x: (0..a).collect(),
        side_y: (a..a + b).collect(),
    };
    Ok((g, split))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(size_error(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges)
}

/// Star on `n` vertices with center 0.
pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, &edges)
}

/// `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_q})`. Vertices `0..s` form the `K_s`; the
/// cliques follow in the order given.
pub fn split_family(n: usize, s: usize, part_sizes: &[usize]) -> Result<Graph> {
    if s == 0 || part_sizes.is_empty() || part_sizes.contains(&0) {
        return Err(size_error("split family needs s >= 1 and non-empty parts"));
    }
    let total = s + part_sizes.iter().sum::<usize>();
    if total != n {
        return Err(size_error(format!(
            "s + sum(parts) = {total}, expected n = {n}"
        )));
    }
    let mut cliques = complete(part_sizes[0])?;
    for &p in &part_sizes[1..] {
        cliques = cliques.disjoint_union(&complete(p)?);
    }
    Ok(complete(s)?.join(&cliques))
}

/// `K_1 ∨ (K_{n-t-1} ∪ \bar K_t)`.
pub fn g1_family(n: usize, t: usize) -> Result<Graph> {
    if t < 2 || n < t + 2 {
        return Err(size_error(format!(
            "g1 needs t >= 2 and n >= t + 2, got n={n}, t={t}"
        )));
    }
    let mut parts = vec![n - t - 1];
    parts.extend(std::iter::repeat_n(1, t));
    split_family(n, 1, &parts)
}

/// `K_{(n-t)/2} ∨ \bar K_{(n+t)/2}`.
pub fn g2_family(n: usize, t: usize) -> Result<Graph> {
    if t < 2 || n < t + 2 || !(n - t).is_multiple_of(2) {
        return Err(size_error(format!(
            "g2 needs t >= 2, n >= t + 2 and n = t mod 2, got n={n}, t={t}"
        )));
    }
    let a = (n - t) / 2;
    let b = (n + t) / 2;
    Ok(complete(a)?.join(&empty_graph(b)?))
}

/// Block sizes of a [`gstar_family`] graph, in vertex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GStar {
    pub s: usize,
    pub n_s: usize,
    pub x: usize,
    pub y: usize,
}

impl GStar {
    /// `[|S|, |N(S)|, |X - S|, |Y - N(S)|]`.
    pub fn block_sizes(&self) -> [usize; 4] {
        [self.s, self.n_s, self.x - self.s, self.y - self.n_s]
    }
}

/// Bipartite graph with `X = S ∪ (X - S)` and `Y = N(S) ∪ (Y - N(S))`, made
/// complete between `S`–`N(S)`, `(X - S)`–`N(S)` and `(X - S)`–`(Y - N(S))`.
///
/// Vertices are laid out as `S, N(S), X - S, Y - N(S)`, so
/// `VertexPartition::from_sizes(&GStar::block_sizes())` is the natural
/// four-block partition.
pub fn gstar_family(s: usize, n_s: usize, x: usize, y: usize) -> Result<(Graph, PartiteSplit)> {
    if s == 0 || n_s == 0 || s > x || n_s > y || x > y {
        return Err(size_error(format!(
            "gstar needs 1 <= s <= x, 1 <= n_s <= y, x <= y; got s={s}, n_s={n_s}, x={x}, y={y}"
        )));
    }
    let [bs, bn, bx, by] = GStar { s, n_s, x, y }.block_sizes();
    let s_set = 0..bs;
    let ns_set = bs..bs + bn;
    let xs_set = bs + bn..bs + bn + bx;
    let yn_set = bs + bn + bx..bs + bn + bx + by;
    let mut edges = Vec::new();
    for u in s_set.clone() {
        edges.extend(ns_set.clone().map(|v| (u, v)));
    }
    for u in xs_set.clone() {
        edges.extend(ns_set.clone().map(|v| (u, v)));
        edges.extend(yn_set.clone().map(|v| (u, v)));
    }
    let g = Graph::new(x + y, &edges)?;
    let split = PartiteSplit {
        side_x: s_set.chain(xs_set).collect(),
        side_y: ns_set.chain(yn_set).collect(),
    };
    Ok((g, split))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_family_sizes() {
        assert_eq!(complete(4).unwrap().size(), 6);
        let (k23, split) = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.size(), 6);
        assert_eq!(split.side_x, vec![0, 1]);
        assert_eq!(split.side_y, vec![2, 3, 4]);
        assert!(cycle(2).is_err());
        assert_eq!(cycle(5).unwrap().size(), 5);
        assert_eq!(path(1).unwrap().size(), 0);
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn extremal_families_match_split_form() {
        let g1 = g1_family(7, 3).unwrap();
        assert_eq!(g1, split_family(7, 1, &[3, 1, 1, 1]).unwrap());
        let manual = complete(1).unwrap().join(
            &complete(3)
                .unwrap()
                .disjoint_union(&empty_graph(3).unwrap()),
        );
        assert_eq!(g1, manual);

        let g2 = g2_family(8, 2).unwrap();
        assert_eq!(g2, split_family(8, 3, &[1; 5]).unwrap());
        assert_eq!(g2.size(), 3 + 15);

        assert!(g2_family(7, 2).is_err());
        assert!(g1_family(4, 3).is_err());
        assert!(split_family(7, 1, &[3, 1, 1]).is_err());
    }

    #[test]
    fn gstar_degrees_and_neighborhood() {
        for (s, n_s, x, y) in [(2, 1, 3, 4), (1, 1, 2, 2), (3, 2, 5, 6), (3, 1, 4, 5)] {
            let (g, split) = gstar_family(s, n_s, x, y).unwrap();
            split.validate(&g).unwrap();
            let s_set: Vec<_> = (0..s).collect();
            let ns: Vec<_> = (s..s + n_s).collect();
            assert_eq!(g.neighborhood(&s_set), ns);
            for &v in &split.side_x[s..] {
                assert_eq!(g.degree(v), y);
            }
            for v in 0..s {
                assert_eq!(g.degree(v), n_s);
            }
        }
        // (1,1,2,2) is the path 0-1-2-3.
        let (p, _) = gstar_family(1, 1, 2, 2).unwrap();
        assert_eq!(p, path(4).unwrap());
        assert!(gstar_family(3, 1, 2, 4).is_err());
        assert!(gstar_family(1, 1, 3, 2).is_err());
    }
}
