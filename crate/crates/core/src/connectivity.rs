//! Local vertex connectivity and the average connectivity matrix.
//!
//! `κ(u, v)` is computed as a unit-capacity max flow on the vertex-split
//! digraph: every vertex `w ∉ {u, v}` becomes `w_in → w_out` with capacity 1
//! and every edge `xy` becomes the arcs `x_out → y_in`, `y_out → x_in`. The
//! flow runs from `u_out` to `v_in`; an edge `uv` contributes one direct arc.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::spectral::SymmetricMatrix;

/// All-pairs counts from this size up are computed in parallel.
const PARALLEL_ORDER: usize = 24;

fn inp(w: usize) -> usize {
    2 * w
}

fn out(w: usize) -> usize {
    2 * w + 1
}

fn split_flow(g: &Graph, u: usize, v: usize, net: &mut FlowNetwork) -> u32 {
    let n = g.order();
    net.reset(2 * n);
    for w in 0..n {
        if w != u && w != v {
            net.add_arc(inp(w), out(w), 1);
        }
        for &x in g.neighbors(w) {
            net.add_arc(out(w), inp(x), 1);
        }
    }
    net.max_flow(out(u), inp(v))
}

/// Maximum number of internally disjoint `u`-`v` paths. Zero across components.
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> Result<u32> {
    let n = g.order();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(split_flow(g, u, v, &mut FlowNetwork::new(2 * n)))
}

/// Symmetric integer matrix of local connectivities with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaMatrix {
    n: usize,
    data: Vec<u32>,
}

impl KappaMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn row_sum(&self, u: usize) -> u64 {
        self.row(u).iter().map(|&k| k as u64).sum()
    }

    /// `Σ κ(u, v)` over unordered pairs.
    pub fn pair_sum(&self) -> u64 {
        (0..self.n).map(|u| self.row_sum(u)).sum::<u64>() / 2
    }

    /// The matrix with entries `κ(u, v)` as reals, i.e. `C(n,2)·A_κ̄`.
    pub fn to_scaled_matrix(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_fn(self.n, |i, j| self.get(i, j) as f64)
    }
}

pub fn all_pairs_connectivity(g: &Graph) -> Result<KappaMatrix> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidSize(format!(
            "all-pairs connectivity needs n >= 2, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let values: Vec<u32> = if n >= PARALLEL_ORDER {
        pairs
            .par_iter()
            .map_init(
                || FlowNetwork::new(2 * n),
                |net, &(u, v)| split_flow(g, u, v, net),
            )
            .collect()
    } else {
        let mut net = FlowNetwork::new(2 * n);
        pairs
            .iter()
            .map(|&(u, v)| split_flow(g, u, v, &mut net))
            .collect()
    };
    let mut data = vec![0u32; n * n];
    for (&(u, v), k) in pairs.iter().zip(values) {
        data[u * n + v] = k;
        data[v * n + u] = k;
    }
    Ok(KappaMatrix { n, data })
}

/// Local connectivities together with the scalars derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectivityProfile {
    pub kappa: KappaMatrix,
    pub kappa_bar: f64,
    pub transmissions: Vec<f64>,
    pub transmission_max: f64,
}

impl ConnectivityProfile {
    pub fn compute(g: &Graph) -> Result<Self> {
        Ok(Self::from_kappa(all_pairs_connectivity(g)?))
    }

    pub fn from_kappa(kappa: KappaMatrix) -> Self {
        let n = kappa.order();
        let pairs = (n * (n - 1) / 2) as f64;
        let transmissions: Vec<f64> = (0..n).map(|v| kappa.row_sum(v) as f64 / pairs).collect();
        let max_row = (0..n).map(|v| kappa.row_sum(v)).max().unwrap_or(0);
        ConnectivityProfile {
            kappa_bar: kappa.pair_sum() as f64 / pairs,
            transmission_max: max_row as f64 / pairs,
            transmissions,
            kappa,
        }
    }

    pub fn order(&self) -> usize {
        self.kappa.order()
    }

    /// `A_κ̄(G)`: entries `κ(u, v) / C(n, 2)`.
    pub fn matrix(&self) -> SymmetricMatrix {
        let n = self.order();
        let pairs = (n * (n - 1) / 2) as f64;
        SymmetricMatrix::from_fn(n, |i, j| self.kappa.get(i, j) as f64 / pairs)
    }
}

/// `A_κ̄(G)`. Refuses disconnected graphs.
pub fn avg_connectivity_matrix(g: &Graph) -> Result<SymmetricMatrix> {
    if g.order() >= 2 && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(ConnectivityProfile::compute(g)?.matrix())
}

/// `κ̄(G)`, summing over unordered pairs.
pub fn average_connectivity(g: &Graph) -> Result<f64> {
    Ok(ConnectivityProfile::compute(g)?.kappa_bar)
}

pub fn transmission(g: &Graph, v: usize) -> Result<f64> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(ConnectivityProfile::compute(g)?.transmissions[v])
}

pub fn graph_transmission(g: &Graph) -> Result<f64> {
    Ok(ConnectivityProfile::compute(g)?.transmission_max)
}

/// `r` such that every non-adjacent pair has `κ(u, v) = r`; complete graphs
/// report `n - 1`.
pub fn uniform_connectivity(g: &Graph, kappa: &KappaMatrix) -> Option<u32> {
    let n = g.order();
    let mut value = None;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let k = kappa.get(u, v);
            match value {
                None => value = Some(k),
                Some(r) if r != k => return None,
                _ => {}
            }
        }
    }
    Some(value.unwrap_or(n as u32 - 1))
}

/// `r` such that every pair, adjacent or not, has `κ(u, v) = r`.
pub fn strict_uniform_connectivity(kappa: &KappaMatrix) -> Option<u32> {
    let n = kappa.order();
    let r = kappa.get(0, 1);
    (0..n)
        .all(|u| (0..n).all(|v| u == v || kappa.get(u, v) == r))
        .then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, star};

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn local_values() {
        let k4 = complete(4).unwrap();
        let c5 = cycle(5).unwrap();
        let p = petersen();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(local_connectivity(&k4, u, v).unwrap(), 3);
                }
            }
        }
        assert_eq!(local_connectivity(&c5, 0, 2).unwrap(), 2);
        assert_eq!(local_connectivity(&c5, 0, 1).unwrap(), 2);
        for v in 1..10 {
            assert_eq!(local_connectivity(&p, 0, v).unwrap(), 3);
        }
        assert_eq!(local_connectivity(&k4, 1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn all_pairs_examples() {
        let tree = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let kt = all_pairs_connectivity(&tree).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(kt.get(u, v), (u != v) as u32);
            }
        }

        let (k23, _) = complete_bipartite(2, 3).unwrap();
        let k = all_pairs_connectivity(&k23).unwrap();
        assert_eq!(k.get(0, 1), 3);
        assert_eq!(k.get(2, 3), 2);
        assert_eq!(k.get(0, 4), 2);
        assert_eq!(k.pair_sum(), 21);

        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let k = all_pairs_connectivity(&two_k2).unwrap();
        assert_eq!((k.get(0, 1), k.get(0, 2), k.get(1, 3)), (1, 0, 0));
        assert!(avg_connectivity_matrix(&two_k2).is_err());
        assert!(all_pairs_connectivity(&complete(1).unwrap()).is_err());
    }

    #[test]
    fn large_graphs_take_the_parallel_path() {
        let g = cycle(30).unwrap();
        let k = all_pairs_connectivity(&g).unwrap();
        assert!((0..30).all(|u| (0..30).all(|v| k.get(u, v) == 2 * (u != v) as u32)));
    }

    #[test]
    fn averages_and_transmissions() {
        assert_eq!(average_connectivity(&complete(4).unwrap()).unwrap(), 3.0);
        assert_eq!(average_connectivity(&path(3).unwrap()).unwrap(), 1.0);
        let (k23, _) = complete_bipartite(2, 3).unwrap();
        assert!((average_connectivity(&k23).unwrap() - 2.1).abs() < 1e-12);

        assert!((transmission(&complete(4).unwrap(), 2).unwrap() - 1.5).abs() < 1e-12);
        assert!((transmission(&star(5).unwrap(), 0).unwrap() - 0.4).abs() < 1e-12);
        let prof = ConnectivityProfile::compute(&k23).unwrap();
        assert!((prof.transmissions[0] - 0.9).abs() < 1e-12);
        assert!((prof.transmissions[3] - 0.8).abs() < 1e-12);
        assert!((prof.transmission_max - 0.9).abs() < 1e-12);
        let sum: f64 = prof.transmissions.iter().sum();
        assert!((sum - 2.0 * prof.kappa_bar).abs() < 1e-12);
    }

    #[test]
    fn matrix_examples() {
        let tree = star(5).unwrap();
        let a = avg_connectivity_matrix(&tree).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(a.get(i, j), if i == j { 0.0 } else { 0.1 });
            }
        }
        let a = avg_connectivity_matrix(&complete(4).unwrap()).unwrap();
        assert_eq!(a.get(0, 3), 0.5);
        let a = avg_connectivity_matrix(&cycle(4).unwrap()).unwrap();
        assert!((a.get(0, 2) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn uniform_variants() {
        let c5 = cycle(5).unwrap();
        let k = all_pairs_connectivity(&c5).unwrap();
        assert_eq!(uniform_connectivity(&c5, &k), Some(2));
        assert_eq!(strict_uniform_connectivity(&k), Some(2));

        let k4e = complete(4).unwrap().without_edge(0, 1);
        let k = all_pairs_connectivity(&k4e).unwrap();
        assert_eq!(uniform_connectivity(&k4e, &k), Some(2));
        assert_eq!(strict_uniform_connectivity(&k), None);

        let k5 = complete(5).unwrap();
        let k = all_pairs_connectivity(&k5).unwrap();
        assert_eq!(uniform_connectivity(&k5, &k), Some(4));
    }
}
