//! Test-side oracles. None of them call into the library's algorithms; they
//! only read adjacency through `Graph::has_edge`.
#![allow(dead_code)]

use avgconn::Graph;
use nalgebra::DMatrix;
use rand::Rng;

/// Adjacency rows as bitmasks. Order ≤ 64.
pub fn rows(g: &Graph) -> Vec<u64> {
    let n = g.order();
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| g.has_edge(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect()
}

fn reach(rows: &[u64], from: usize, alive: u64) -> u64 {
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & alive & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Labeled connected graphs on `n` vertices, by the standard recurrence
/// `c(n) = 2^C(n,2) − Σ_{k<n} C(n−1,k−1) c(k) 2^C(n−k,2)`.
pub fn connected_count(n: usize) -> u128 {
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let all = 1u128 << binomial(m as u64, 2);
        let split: u128 = (1..m)
            .map(|k| {
                binomial(m as u64 - 1, k as u64 - 1) * c[k] * (1u128 << binomial((m - k) as u64, 2))
            })
            .sum();
        c[m] = all - split;
    }
    c[n]
}

/// Labeled connected bipartite graphs on `n` vertices, counted through
/// 2-colored graphs: each connected bipartite graph has exactly two colorings.
pub fn connected_bipartite_count(n: usize) -> u128 {
    // b(n): pairs (graph, proper 2-coloring) = Σ_k C(n,k) 2^{k(n−k)}.
    // Connected ones are extracted with the exponential-formula recurrence
    // applied to colored graphs.
    let b = |m: usize| -> u128 {
        (0..=m)
            .map(|k| binomial(m as u64, k as u64) << (k * (m - k)))
            .sum()
    };
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let split: u128 = (1..m)
            .map(|k| binomial(m as u64 - 1, k as u64 - 1) * c[k] * b(m - k))
            .sum();
        c[m] = b(m) - split;
    }
    c[n] / 2
}

/// Minimum number of vertices whose removal separates `u` from `v`, or, for
/// adjacent pairs, one more than that count in `G − uv`. Exhaustive over
/// vertex subsets.
pub fn kappa_by_cuts(g: &Graph, u: usize, v: usize) -> u32 {
    let mut r = rows(g);
    let mut bonus = 0;
    if r[u] >> v & 1 == 1 {
        r[u] &= !(1 << v);
        r[v] &= !(1 << u);
        bonus = 1;
    }
    let n = g.order();
    let others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
    let full = (1u64 << n) - 1;
    let mut best = u32::MAX;
    for sub in 0u64..1 << others.len() {
        let size = sub.count_ones();
        if size >= best {
            continue;
        }
        let cut = others
            .iter()
            .enumerate()
            .filter(|(i, _)| sub >> i & 1 == 1)
            .fold(0u64, |m, (_, &w)| m | 1 << w);
        if reach(&r, u, full & !cut) >> v & 1 == 0 {
            best = size;
        }
    }
    best + bonus
}

/// Maximum matching size by exhaustive branching on the lowest free vertex.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(rows: &[u64], free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(rows, rest);
        let mut cand = rows[v] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            best = best.max(1 + go(rows, rest & !(1 << u)));
        }
        best
    }
    let n = g.order();
    go(&rows(g), if n == 64 { u64::MAX } else { (1 << n) - 1 })
}

/// `max_S (o(G−S) − |S|)` by trying every `S`.
pub fn brute_deficiency(g: &Graph) -> i64 {
    let r = rows(g);
    let n = g.order();
    let full = (1u64 << n) - 1;
    (0u64..1 << n)
        .map(|s| {
            let mut left = full & !s;
            let mut odd = 0i64;
            while left != 0 {
                let comp = reach(&r, left.trailing_zeros() as usize, left);
                odd += (comp.count_ones() % 2) as i64;
                left &= !comp;
            }
            odd - s.count_ones() as i64
        })
        .max()
        .unwrap()
}

/// Two-coloring test by BFS.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.order();
    let mut color = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if g.has_edge(u, v) {
                    match color[v] {
                        None => {
                            color[v] = Some(!color[u].unwrap());
                            stack.push(v);
                        }
                        Some(c) if c == color[u].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

/// κ matrix from the cut oracle, as `κ(u,v)/C(n,2)` rows.
pub fn scaled_rows(kappa: &[Vec<u32>]) -> Vec<Vec<f64>> {
    let n = kappa.len();
    let c = (n * (n - 1) / 2) as f64;
    kappa
        .iter()
        .map(|r| r.iter().map(|&k| k as f64 / c).collect())
        .collect()
}

/// Largest eigenvalue of a symmetric matrix, through nalgebra.
pub fn lambda_max(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    m.symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Erdős–Rényi graph with the given order and edge probability.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Whether `|a − b| ≤ rel·max(|a|, |b|, 1)`.
pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}
