//! Quotient matrices over vertex partitions.

use super::SymmetricMatrix;
use crate::error::{Error, Result};
use crate::graph::VertexPartition;

pub const DEFAULT_EQUITABLE_TOL: f64 = 1e-9;

/// `q_ij` is the average row sum of the block `A_ij`. Not symmetric in general.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    partition: VertexPartition,
}

impl QuotientMatrix {
    /// From explicit rows; the partition supplies the block sizes.
    pub fn from_rows(rows: &[Vec<f64>], partition: VertexPartition) -> Result<Self> {
        let q = rows.len();
        if rows.iter().any(|r| r.len() != q) || partition.len() != q {
            return Err(Error::InvalidParameters(format!(
                "quotient rows must be {0}x{0} to match the partition",
                partition.len()
            )));
        }
        Ok(QuotientMatrix {
            order: q,
            entries: rows.concat(),
            partition,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn partition(&self) -> &VertexPartition {
        &self.partition
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.order)
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        (0..self.order).map(|j| self.get(i, j)).sum()
    }

    pub fn scaled(&self, c: f64) -> Self {
        QuotientMatrix {
            order: self.order,
            entries: self.entries.iter().map(|v| v * c).collect(),
            partition: self.partition.clone(),
        }
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &QuotientMatrix) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    /// Perron root and vector by power iteration on `Q + cI`, `c` the largest
    /// row sum. Converges when the Collatz–Wielandt ratios `(Qx)_i / x_i`
    /// agree to `tol · c`. Requires an irreducible non-negative matrix.
    pub fn perron(&self, tol: f64) -> Result<(f64, Vec<f64>)> {
        if let Some(k) = self.entries.iter().position(|&v| v < 0.0) {
            return Err(Error::NegativeEntry(k / self.order, k % self.order));
        }
        let q = self.order;
        let shift = (0..q).map(|i| self.row_sum(i)).fold(0.0, f64::max);
        let mut x = vec![1.0 / q as f64; q];
        if shift == 0.0 {
            return Ok((0.0, x));
        }
        for _ in 0..super::POWER_MAX_ITERATIONS {
            let qx = self.mul_vec(&x);
            if x.iter().all(|&v| v > 0.0) {
                let ratios = qx.iter().zip(&x).map(|(a, b)| a / b);
                let (lo, hi) = ratios.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                    (lo.min(r), hi.max(r))
                });
                if hi - lo <= tol * shift {
                    return Ok(((lo + hi) / 2.0, x));
                }
            }
            let mut y: Vec<f64> = qx.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
            let total: f64 = y.iter().sum();
            if total == 0.0 {
                return Err(Error::Reducible);
            }
            y.iter_mut().for_each(|v| *v /= total);
            x = y;
        }
        Err(Error::NoConvergence(super::POWER_MAX_ITERATIONS))
    }

    pub fn spectral_radius(&self) -> Result<f64> {
        Ok(self.perron(1e-13)?.0)
    }

    /// Largest real root of the characteristic polynomial, for orders 1–3.
    ///
    /// Order 2 uses the quadratic formula. Order 3 runs Newton's method from
    /// above the Gershgorin bound; for a non-negative matrix the Perron root
    /// dominates every other eigenvalue's real part, so the polynomial is
    /// convex to its right and the iterates decrease monotonically onto it.
    pub fn characteristic_radius(&self) -> Option<f64> {
        let a = |i, j| self.get(i, j);
        match self.order {
            1 => Some(a(0, 0)),
            2 => {
                let tr = a(0, 0) + a(1, 1);
                let det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
                Some((tr + (tr * tr - 4.0 * det).max(0.0).sqrt()) / 2.0)
            }
            3 => {
                let tr = a(0, 0) + a(1, 1) + a(2, 2);
                let minors = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2)
                    - a(0, 2) * a(2, 0)
                    + a(1, 1) * a(2, 2)
                    - a(1, 2) * a(2, 1);
                let det = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
                    - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
                    + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
                let p = |l: f64| ((l - tr) * l + minors) * l - det;
                let dp = |l: f64| (3.0 * l - 2.0 * tr) * l + minors;
                let bound = (0..3)
                    .map(|i| (0..3).map(|j| a(i, j).abs()).sum::<f64>())
                    .fold(0.0, f64::max);
                let mut l = bound + 1.0;
                for _ in 0..500 {
                    let d = dp(l);
                    if d == 0.0 {
                        break;
                    }
                    let step = p(l) / d;
                    l -= step;
                    if step.abs() <= 1e-15 * l.abs().max(1.0) {
                        break;
                    }
                }
                Some(l)
            }
            _ => None,
        }
    }
}

fn block_sum(m: &SymmetricMatrix, row: usize, block: &[usize]) -> f64 {
    block.iter().map(|&j| m.get(row, j)).sum()
}

pub fn quotient_matrix(m: &SymmetricMatrix, p: &VertexPartition) -> Result<QuotientMatrix> {
    if p.order() != m.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, matrix has order {}",
            p.order(),
            m.order()
        )));
    }
    let q = p.len();
    let mut entries = vec![0.0; q * q];
    for (i, bi) in p.blocks().iter().enumerate() {
        for (j, bj) in p.blocks().iter().enumerate() {
            let total: f64 = bi.iter().map(|&u| block_sum(m, u, bj)).sum();
            entries[i * q + j] = total / bi.len() as f64;
        }
    }
    Ok(QuotientMatrix {
        order: q,
        entries,
        partition: p.clone(),
    })
}

/// Every block `A_ij` has constant row sums, to within `tol`.
pub fn is_equitable(m: &SymmetricMatrix, p: &VertexPartition, tol: f64) -> bool {
    p.order() == m.order()
        && p.blocks().iter().all(|bi| {
            p.blocks().iter().all(|bj| {
                let sums: Vec<f64> = bi.iter().map(|&u| block_sum(m, u, bj)).collect();
                let lo = sums.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                hi - lo <= tol
            })
        })
}
