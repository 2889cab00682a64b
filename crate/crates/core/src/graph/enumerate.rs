//! Labeled enumeration of connected graphs by walking every edge subset.

use std::ops::Range;

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 8;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Vertex pairs in graph6 bit order; bit `k` of an edge mask is pair `k`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

fn check_order(n: usize) -> Result<()> {
    if !(2..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::InvalidSize(format!(
            "enumeration supports 2 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Reachability over bit rows. Requires `n <= 32`.
fn rows_connected(rows: &[u32]) -> bool {
    let n = rows.len();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

pub fn mask_is_connected(n: usize, mask: u64) -> bool {
    let mut rows = vec![0u32; n];
    for (k, (i, j)) in pairs(n).into_iter().enumerate() {
        if mask >> k & 1 == 1 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    rows_connected(&rows)
}

pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, &edges).expect("mask pairs are in range")
}

/// Stream of every labeled connected graph on `n` vertices, in increasing
/// edge-mask order. Yields `(mask, graph)` through [`ConnectedGraphs::with_masks`].
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl ConnectedGraphs {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self::range(n, 0..1u64 << pair_count(n)))
    }

    /// Restricts the walk to a slice of the mask space, used to split sweeps
    /// across workers.
    pub fn range(n: usize, masks: Range<u64>) -> Self {
        let total = 1u64 << pair_count(n);
        ConnectedGraphs {
            n,
            pairs: pairs(n),
            next: masks.start.min(total),
            end: masks.end.min(total),
        }
    }

    pub fn mask_space(n: usize) -> Result<u64> {
        check_order(n)?;
        Ok(1u64 << pair_count(n))
    }

    pub fn with_masks(self) -> impl Iterator<Item = (u64, Graph)> {
        let n = self.n;
        self.masks().map(move |m| (m, graph_from_edge_mask(n, m)))
    }

    fn masks(self) -> impl Iterator<Item = u64> {
        let ConnectedGraphs {
            n,
            pairs,
            next,
            end,
        } = self;
        (next..end).filter(move |&mask| {
            let mut rows = [0u32; MAX_ENUMERATION_ORDER];
            let mut m = mask;
            while m != 0 {
                let k = m.trailing_zeros() as usize;
                m &= m - 1;
                let (i, j) = pairs[k];
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            rows_connected(&rows[..n])
        })
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let mut rows = [0u32; MAX_ENUMERATION_ORDER];
            for (k, &(i, j)) in self.pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
            if rows_connected(&rows[..self.n]) {
                return Some(graph_from_edge_mask(self.n, mask));
            }
        }
        None
    }
}
