//! Dense symmetric matrices and the eigen-machinery used on them.
//!
//! Two independent routes to the largest eigenvalue are kept: a full cyclic
//! Jacobi decomposition and a shifted power iteration. Tests use each as the
//! other's oracle.

mod jacobi;
mod power;
mod quotient;

pub use jacobi::{eigen_symmetric, EigenResult, JACOBI_MAX_SWEEPS};
pub use power::{
    dominance_holds, gershgorin_bound, perron_vector, rayleigh_quotient, spectral_radius,
    spectral_radius_default, DEFAULT_POWER_TOL, POWER_MAX_ITERATIONS,
};
pub use quotient::{is_equitable, quotient_matrix, QuotientMatrix, DEFAULT_EQUITABLE_TOL};

use std::collections::VecDeque;

/// Real symmetric matrix, stored dense and row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    /// Evaluates `f` on the upper triangle and mirrors it.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; order * order];
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                entries[i * order + j] = v;
                entries[j * order + i] = v;
            }
        }
        SymmetricMatrix { order, entries }
    }

    /// Uses the upper triangle of `rows`; returns `None` when the input is
    /// ragged or not exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let symmetric = (0..n).all(|i| (0..i).all(|j| rows[i][j] == rows[j][i]));
        if !symmetric {
            return None;
        }
        Some(Self::from_fn(n, |i, j| rows[i][j]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.row(i).iter().sum()
    }

    pub fn max_row_sum(&self) -> f64 {
        (0..self.order)
            .map(|i| self.row_sum(i))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, c: f64) -> Self {
        SymmetricMatrix {
            order: self.order,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// First entry that is negative, if any.
    pub fn negative_entry(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|&v| v < 0.0)
            .map(|k| (k / self.order, k % self.order))
    }

    /// Strong connectivity of the off-diagonal support pattern.
    pub fn is_irreducible(&self) -> bool {
        let n = self.order;
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for (j, s) in seen.iter_mut().enumerate() {
                if j != i && self.get(i, j) != 0.0 && !*s {
                    *s = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
