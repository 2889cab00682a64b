//! Maximum matchings, Berge–Tutte deficiency and Hall violators.

mod bipartite;
mod blossom;
mod tutte;

pub use bipartite::{bipartite_matching, hall_witness};
pub use tutte::{berge_tutte_deficiency, odd_component_count, DEFICIENCY_MAX_ORDER};

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, PartiteSplit};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingResult {
    /// Disjoint pairs `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub alpha_prime: usize,
    /// `n − 2α′`.
    pub deficiency: usize,
    /// `S` with `o(G − S) − |S| = deficiency`, smallest then lexicographically
    /// first. Only searched for when `n ≤ DEFICIENCY_MAX_ORDER`.
    pub witness: Option<Vec<usize>>,
}

fn pairs_from_mates(mate: &[Option<usize>]) -> Vec<(usize, usize)> {
    mate.iter()
        .enumerate()
        .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| (v, u)))
        .collect()
}

fn result_from_mates(g: &Graph, mate: &[Option<usize>]) -> MatchingResult {
    let edges = pairs_from_mates(mate);
    let alpha_prime = edges.len();
    let deficiency = g.order() - 2 * alpha_prime;
    let witness = if g.order() <= DEFICIENCY_MAX_ORDER {
        tutte::witness_for(g, deficiency).ok().flatten()
    } else {
        None
    };
    MatchingResult {
        edges,
        alpha_prime,
        deficiency,
        witness,
    }
}

/// Maximum matching of a general graph.
pub fn maximum_matching(g: &Graph) -> MatchingResult {
    result_from_mates(g, &blossom::blossom_mates(g))
}

/// Maximum matching through the bipartite fast path.
pub fn maximum_bipartite_matching(g: &Graph, split: &PartiteSplit) -> Result<MatchingResult> {
    Ok(result_from_mates(g, &bipartite::hopcroft_karp(g, split)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, gstar_family, path, star};

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, &e).unwrap()
    }

    fn is_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
        let mut used = vec![false; g.order()];
        edges.iter().all(|&(u, v)| {
            let ok = g.has_edge(u, v) && !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            ok
        })
    }

    #[test]
    fn small_examples() {
        for (g, alpha) in [
            (path(4).unwrap(), 2),
            (complete_bipartite(2, 3).unwrap().0, 2),
            (petersen(), 5),
            (cycle(7).unwrap(), 3),
            (star(6).unwrap(), 1),
            (complete(5).unwrap(), 2),
        ] {
            let r = maximum_matching(&g);
            assert_eq!(r.alpha_prime, alpha, "{g:?}");
            assert!(is_matching(&g, &r.edges));
            let w = r.witness.unwrap();
            let odd = odd_component_count(&g, &w).unwrap();
            assert_eq!(odd - w.len(), r.deficiency);
        }
    }

    #[test]
    fn blossom_needs_contraction() {
        // Triangle with pendant paths; greedy picks badly from vertex 0.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (1, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).alpha_prime, 3);
    }

    #[test]
    fn bipartite_fast_path() {
        let (k33, split) = complete_bipartite(3, 3).unwrap();
        assert_eq!(bipartite_matching(&k33, &split).unwrap(), 3);
        let k15 = star(6).unwrap();
        let split = k15.bipartition().unwrap();
        assert_eq!(bipartite_matching(&k15, &split).unwrap(), 1);
        let (g, split) = gstar_family(2, 1, 3, 4).unwrap();
        assert_eq!(bipartite_matching(&g, &split).unwrap(), 2);
        let bad = PartiteSplit {
            side_x: vec![0, 1],
            side_y: vec![2],
        };
        assert!(bipartite_matching(&path(3).unwrap(), &bad).is_err());
    }

    #[test]
    fn odd_components() {
        let k13 = star(4).unwrap();
        assert_eq!(odd_component_count(&k13, &[0]).unwrap(), 3);
        assert_eq!(odd_component_count(&complete(4).unwrap(), &[]).unwrap(), 0);
        assert_eq!(odd_component_count(&cycle(7).unwrap(), &[]).unwrap(), 1);
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(
            berge_tutte_deficiency(&star(4).unwrap()).unwrap(),
            (2, vec![0])
        );
        assert_eq!(
            berge_tutte_deficiency(&complete(4).unwrap()).unwrap(),
            (0, vec![])
        );
        assert_eq!(
            berge_tutte_deficiency(&cycle(7).unwrap()).unwrap(),
            (1, vec![])
        );
        let big = path(21).unwrap();
        assert!(berge_tutte_deficiency(&big).is_err());
        assert_eq!(maximum_matching(&big).witness, None);
    }

    #[test]
    fn witness_search_matches_exhaustive_tie_break() {
        for g in [
            petersen(),
            star(5).unwrap(),
            gstar_family(3, 1, 4, 5).unwrap().0,
        ] {
            let (d, s) = berge_tutte_deficiency(&g).unwrap();
            let r = maximum_matching(&g);
            assert_eq!(r.deficiency, d);
            assert_eq!(r.witness.unwrap(), s);
        }
    }

    #[test]
    fn hall_witnesses() {
        let (k23, split) = complete_bipartite(2, 3).unwrap();
        assert_eq!(hall_witness(&k23, &split).unwrap(), Vec::<usize>::new());

        let k13 = star(4).unwrap();
        let leaves = PartiteSplit {
            side_x: vec![1, 2, 3],
            side_y: vec![0],
        };
        assert_eq!(hall_witness(&k13, &leaves).unwrap(), vec![1, 2, 3]);

        let (g, split) = gstar_family(3, 1, 4, 5).unwrap();
        let s = hall_witness(&g, &split).unwrap();
        let alpha = maximum_matching(&g).alpha_prime;
        assert_eq!(
            split.side_x.len() - s.len() + g.neighborhood(&s).len(),
            alpha
        );
    }
}
