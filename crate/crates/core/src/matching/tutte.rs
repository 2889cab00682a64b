//! Exhaustive Berge–Tutte deficiency over vertex subsets.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the subset searches.
pub const DEFICIENCY_MAX_ORDER: usize = 20;

/// Subset counts from this size up are split across threads.
const PARALLEL_SUBSETS: u32 = 1 << 12;

/// Number of components of `G − S` with an odd number of vertices.
pub fn odd_component_count(g: &Graph, s: &[usize]) -> Result<usize> {
    let n = g.order();
    let mut removed = vec![false; n];
    for &v in s {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        removed[v] = true;
    }
    let (_, sizes) = g.components_avoiding(&removed);
    Ok(sizes.iter().filter(|&&c| c % 2 == 1).count())
}

fn adjacency_rows(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | (1 << u)))
        .collect()
}

fn odd_components_masked(rows: &[u32], removed: u32) -> u32 {
    let full = if rows.len() == 32 {
        u32::MAX
    } else {
        (1u32 << rows.len()) - 1
    };
    let mut left = full & !removed;
    let mut odd = 0;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & left & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= !comp;
        odd += comp.count_ones() & 1;
    }
    odd
}

fn dfc(rows: &[u32], mask: u32) -> i64 {
    odd_components_masked(rows, mask) as i64 - mask.count_ones() as i64
}

/// Tie-break order on subsets: smaller first, then lexicographic on the
/// sorted vertex lists, i.e. the set holding the lowest differing vertex wins.
fn precedes(a: u32, b: u32) -> bool {
    match a.count_ones().cmp(&b.count_ones()) {
        std::cmp::Ordering::Equal => {
            let d = a ^ b;
            d == 0 || a & d & d.wrapping_neg() != 0
        }
        o => o == std::cmp::Ordering::Less,
    }
}

fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > DEFICIENCY_MAX_ORDER {
        return Err(Error::TooLarge {
            n: g.order(),
            max: DEFICIENCY_MAX_ORDER,
        });
    }
    Ok(())
}

/// `max_S (o(G−S) − |S|)` over every subset, with a maximizing `S`.
/// Among maximizers the smallest `|S|` wins, then the lexicographically first.
pub fn berge_tutte_deficiency(g: &Graph) -> Result<(usize, Vec<usize>)> {
    check_order(g)?;
    let rows = adjacency_rows(g);
    let subsets: u32 = 1 << g.order();
    let better = |a: (i64, u32), b: (i64, u32)| {
        if a.0 != b.0 {
            if a.0 > b.0 {
                a
            } else {
                b
            }
        } else if precedes(a.1, b.1) {
            a
        } else {
            b
        }
    };
    let best = if subsets >= PARALLEL_SUBSETS {
        (0..subsets)
            .into_par_iter()
            .map(|mask| (dfc(&rows, mask), mask))
            .reduce(|| (i64::MIN, 0), better)
    } else {
        (0..subsets)
            .map(|mask| (dfc(&rows, mask), mask))
            .fold((i64::MIN, 0), better)
    };
    // S = ∅ already gives o(G) ≥ 0.
    Ok((best.0 as usize, mask_vertices(best.1)))
}

/// First subset in (size, lexicographic) order whose deficiency is `target`.
/// When `target` is the true maximum this agrees with `berge_tutte_deficiency`.
pub(crate) fn witness_for(g: &Graph, target: usize) -> Result<Option<Vec<usize>>> {
    check_order(g)?;
    let rows = adjacency_rows(g);
    let n = g.order();
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let mask = combo.iter().fold(0u32, |m, &v| m | (1 << v));
            if dfc(&rows, mask) == target as i64 {
                return Ok(Some(combo));
            }
            // Advance to the next k-combination in lexicographic order.
            let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    Ok(None)
}
