//! Hopcroft–Karp on an explicit bipartition.

use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::{Graph, PartiteSplit};

const NONE: usize = usize::MAX;
const INF: usize = usize::MAX;

/// `mate[v]` over all vertices of `g`, for a maximum matching between the
/// sides of `split`.
pub(crate) fn hopcroft_karp(g: &Graph, split: &PartiteSplit) -> Result<Vec<Option<usize>>> {
    split.validate(g)?;
    let n = g.order();
    let xs = &split.side_x;
    let mut mate = vec![NONE; n];
    let mut dist = vec![INF; n];

    loop {
        // Layer X-vertices by alternating distance from the free ones.
        let mut queue = VecDeque::new();
        for &x in xs {
            if mate[x] == NONE {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = INF;
            }
        }
        let mut found = false;
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                match mate[y] {
                    NONE => found = true,
                    m if dist[m] == INF => {
                        dist[m] = dist[x] + 1;
                        queue.push_back(m);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        for &x in xs {
            if mate[x] == NONE {
                augment(g, x, &mut mate, &mut dist);
            }
        }
    }
    Ok(mate.into_iter().map(|m| (m != NONE).then_some(m)).collect())
}

fn augment(g: &Graph, x: usize, mate: &mut [usize], dist: &mut [usize]) -> bool {
    for &y in g.neighbors(x) {
        let next = mate[y];
        let advances = next == NONE || (dist[next] == dist[x] + 1 && augment(g, next, mate, dist));
        if advances {
            mate[x] = y;
            mate[y] = x;
            return true;
        }
    }
    dist[x] = INF;
    false
}

/// Matching number of a bipartite graph.
pub fn bipartite_matching(g: &Graph, split: &PartiteSplit) -> Result<usize> {
    let mate = hopcroft_karp(g, split)?;
    Ok(split.side_x.iter().filter(|&&x| mate[x].is_some()).count())
}

/// A set `S ⊆ X` with `α′ = |X| − |S| + |N(S)|`.
///
/// `S` is the set of X-vertices reachable from the unmatched X-vertices by
/// alternating paths. Its neighborhood is exactly the reachable Y-vertices,
/// all of them matched back into `S`, so `|S| − |N(S)|` counts the unmatched
/// X-vertices. Empty when the matching saturates `X`.
pub fn hall_witness(g: &Graph, split: &PartiteSplit) -> Result<Vec<usize>> {
    let mate = hopcroft_karp(g, split)?;
    let n = g.order();
    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = split
        .side_x
        .iter()
        .copied()
        .filter(|&x| mate[x].is_none())
        .collect();
    for &x in &queue {
        reached[x] = true;
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if !reached[y] {
                reached[y] = true;
                if let Some(m) = mate[y] {
                    if !reached[m] {
                        reached[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    let mut s: Vec<usize> = split
        .side_x
        .iter()
        .copied()
        .filter(|&x| reached[x])
        .collect();
    s.sort_unstable();
    Ok(s)
}
