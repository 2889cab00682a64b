use super::SymmetricMatrix;
use crate::error::{Error, Result};

pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius norm, relative to `‖M‖_F`, at which sweeping stops.
const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Full spectrum of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// Non-increasing.
    pub eigenvalues: Vec<f64>,
    pub spectral_radius: f64,
    /// Unit eigenvector of `λ₁`, present when it can be chosen entrywise positive.
    pub perron_vector: Option<Vec<f64>>,
}

impl EigenResult {
    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
pub fn eigen_symmetric(m: &SymmetricMatrix) -> Result<EigenResult> {
    let n = m.order();
    if n == 0 {
        return Err(Error::InvalidSize("matrix of order 0".into()));
    }
    let mut a: Vec<f64> = (0..n).flat_map(|i| m.row(i).to_vec()).collect();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = OFF_DIAGONAL_TOL * m.frobenius_norm();
    let off_norm = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = off_norm(&a) <= threshold;
    let mut sweeps = 0;
    while !converged {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence(sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // signum(0.0) is 1.0, so theta == 0 gives the 45 degree rotation.
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        converged = off_norm(&a) <= threshold;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let spectral_radius = eigenvalues.iter().map(|l| l.abs()).fold(0.0, f64::max);

    let top = order[0];
    let mut column: Vec<f64> = (0..n).map(|k| v[k * n + top]).collect();
    if column.iter().sum::<f64>() < 0.0 {
        column.iter_mut().for_each(|x| *x = -*x);
    }
    let perron_vector = column.iter().all(|&x| x > 0.0).then_some(column);

    Ok(EigenResult {
        eigenvalues,
        spectral_radius,
        perron_vector,
    })
}
