//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is stored twice: sorted neighbor lists for iteration and a
//! packed bit row per vertex for constant-time edge queries.

mod edgelist;
mod enumerate;
mod families;
mod graph6;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use enumerate::{
    graph_from_edge_mask, mask_is_connected, pair_count, ConnectedGraphs, MAX_ENUMERATION_ORDER,
};
pub use families::{
    complete, complete_bipartite, cycle, empty_graph, g1_family, g2_family, gstar_family, path,
    split_family, star, GStar,
};
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6, GRAPH6_MAX_ORDER};

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple, loop-free, undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    bits: Vec<Vec<u64>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

fn words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut bits = vec![vec![0u64; words(n)]; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            bits[u][v / 64] |= 1 << (v % 64);
            bits[v][u / 64] |= 1 << (u % 64);
        }
        let adj = bits
            .iter()
            .map(|row| {
                (0..n)
                    .filter(|&w| row[w / 64] >> (w % 64) & 1 == 1)
                    .collect()
            })
            .collect();
        Ok(Graph { n, adj, bits })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u][v / 64] >> (v % 64) & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    /// Component label per vertex; labels are assigned in order of each
    /// component's smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        self.components_avoiding(&vec![false; self.n]).0
    }

    /// Components of `G - removed`. Removed vertices get label `usize::MAX`.
    /// Returns the labels and the size of each component.
    pub fn components_avoiding(&self, removed: &[bool]) -> (Vec<usize>, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if removed[start] || label[start] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let mut count = 0;
            label[start] = id;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                count += 1;
                for &w in &self.adj[u] {
                    if !removed[w] && label[w] == usize::MAX {
                        label[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(count);
        }
        (label, sizes)
    }

    pub fn is_connected(&self) -> bool {
        let (_, sizes) = self.components_avoiding(&vec![false; self.n]);
        sizes.len() == 1
    }

    /// Two-coloring by breadth-first search. In every component the smallest
    /// vertex goes to `side_x`. Returns `None` for non-bipartite graphs.
    pub fn bipartition(&self) -> Option<PartiteSplit> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        let (mut side_x, mut side_y) = (Vec::new(), Vec::new());
        for (v, c) in color.into_iter().enumerate() {
            if c == Some(false) {
                side_x.push(v);
            } else {
                side_y.push(v);
            }
        }
        Some(PartiteSplit { side_x, side_y })
    }

    /// Neighbors of a vertex subset, sorted and deduplicated.
    pub fn neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for &v in set {
            for &w in &self.adj[v] {
                seen[w] = true;
            }
        }
        (0..self.n).filter(|&w| seen[w]).collect()
    }

    /// Copy of the graph without the edge `uv` (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        Graph::new(self.n, &edges).expect("subgraph of a valid graph")
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + shift, v + shift)),
        );
        Graph::new(self.n + other.n, &edges).expect("union of valid graphs")
    }

    /// Join: the disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + shift, v + shift)),
        );
        for u in 0..self.n {
            for v in 0..other.n {
                edges.push((u, v + shift));
            }
        }
        Graph::new(self.n + other.n, &edges).expect("join of valid graphs")
    }
}

/// The two sides of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartiteSplit {
    pub side_x: Vec<usize>,
    pub side_y: Vec<usize>,
}

impl PartiteSplit {
    /// Checks that the sides partition `V(g)` and that no edge lies inside a side.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        let mut side = vec![None; n];
        for (s, verts) in [(0u8, &self.side_x), (1u8, &self.side_y)] {
            for &v in verts {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if side[v].is_some() {
                    return Err(Error::InvalidSplit(format!("vertex {v} listed twice")));
                }
                side[v] = Some(s);
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(Error::InvalidSplit(format!("vertex {v} on neither side")));
        }
        for (u, v) in g.edges() {
            if side[u] == side[v] {
                return Err(Error::InvalidSplit(format!("edge {u}-{v} inside one side")));
            }
        }
        Ok(())
    }

    pub fn swapped(&self) -> PartiteSplit {
        PartiteSplit {
            side_x: self.side_y.clone(),
            side_y: self.side_x.clone(),
        }
    }
}

/// An ordered list of disjoint, non-empty blocks covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two blocks")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} uncovered")));
        }
        Ok(VertexPartition { blocks })
    }

    /// Consecutive blocks of the given sizes: `[0..s0), [s0..s0+s1), ...`.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut next = 0;
        for &s in sizes {
            blocks.push((next..next + s).collect());
            next += s;
        }
        Self::new(next, blocks)
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}
