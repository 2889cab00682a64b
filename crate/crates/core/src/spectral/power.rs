//! Shifted power iteration and the elementary spectral bounds.

use super::SymmetricMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_POWER_TOL: f64 = 1e-12;
pub const POWER_MAX_ITERATIONS: usize = 100_000;

fn check_nonnegative(m: &SymmetricMatrix) -> Result<()> {
    match m.negative_entry() {
        Some((i, j)) => Err(Error::NegativeEntry(i, j)),
        None => Ok(()),
    }
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        x.iter_mut().for_each(|v| *v /= norm);
    }
    norm
}

/// Power iteration on `M + cI` with `c` the largest row sum, which lifts the
/// whole spectrum into `[0, 2c]` so the top eigenvalue dominates in magnitude.
/// Stops once `‖Mx − λx‖₂ ≤ tol · c` for the unit iterate `x`.
fn shifted_power(m: &SymmetricMatrix, tol: f64) -> Result<(f64, Vec<f64>)> {
    let n = m.order();
    let shift = m.max_row_sum().max(0.0);
    let mut x = vec![1.0; n];
    normalize(&mut x);
    if shift == 0.0 {
        return Ok((0.0, x));
    }
    for _ in 0..POWER_MAX_ITERATIONS {
        let mx = m.mul_vec(&x);
        let lambda: f64 = mx.iter().zip(&x).map(|(a, b)| a * b).sum();
        let residual = mx
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol * shift {
            return Ok((lambda, x));
        }
        let mut y: Vec<f64> = mx.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
        normalize(&mut y);
        x = y;
    }
    Err(Error::NoConvergence(POWER_MAX_ITERATIONS))
}

/// Largest eigenvalue of a non-negative symmetric matrix, which is its
/// spectral radius.
pub fn spectral_radius(m: &SymmetricMatrix, tol: f64) -> Result<f64> {
    check_nonnegative(m)?;
    Ok(shifted_power(m, tol)?.0)
}

pub fn spectral_radius_default(m: &SymmetricMatrix) -> Result<f64> {
    spectral_radius(m, DEFAULT_POWER_TOL)
}

/// Positive unit eigenvector for the spectral radius of an irreducible
/// non-negative matrix.
pub fn perron_vector(m: &SymmetricMatrix) -> Result<Vec<f64>> {
    check_nonnegative(m)?;
    if !m.is_irreducible() {
        return Err(Error::Reducible);
    }
    let (_, x) = shifted_power(m, 1e-13)?;
    Ok(x)
}

pub fn rayleigh_quotient(m: &SymmetricMatrix, x: &[f64]) -> Result<f64> {
    if x.len() != m.order() {
        return Err(Error::OrderMismatch(m.order(), x.len()));
    }
    let xx: f64 = x.iter().map(|v| v * v).sum();
    if xx == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mx = m.mul_vec(x);
    Ok(mx.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() / xx)
}

/// `max_i |m_ii| + Σ_{j≠i} |m_ij|`.
pub fn gershgorin_bound(m: &SymmetricMatrix) -> f64 {
    (0..m.order())
        .map(|i| m.row(i).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `a ≥ |b|` entrywise.
pub fn dominance_holds(a: &SymmetricMatrix, b: &SymmetricMatrix) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    let n = a.order();
    Ok((0..n).all(|i| (0..n).all(|j| a.get(i, j) >= b.get(i, j).abs())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::eigen_symmetric;

    fn scaled_pattern(n: usize, c: f64) -> SymmetricMatrix {
        SymmetricMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { c })
    }

    #[test]
    fn radius_of_simple_patterns() {
        let k6 = scaled_pattern(6, 1.0 / 3.0);
        assert!((spectral_radius_default(&k6).unwrap() - 5.0 / 3.0).abs() < 1e-12);
        let c4 = scaled_pattern(4, 1.0 / 3.0);
        assert!((spectral_radius_default(&c4).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bipartite_like_spectrum_is_handled_by_the_shift() {
        // Adjacency of K_{3,3}: eigenvalues ±3 with equal magnitude.
        let m = SymmetricMatrix::from_fn(6, |i, j| ((i < 3) != (j < 3)) as u8 as f64);
        assert!((spectral_radius_default(&m).unwrap() - 3.0).abs() < 1e-10);
        // Path P2 has eigenvalues ±1.
        let p2 = SymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert!((spectral_radius_default(&p2).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_negative_entries() {
        let m = SymmetricMatrix::from_rows(&[vec![0.0, -1.0], vec![-1.0, 0.0]]).unwrap();
        assert_eq!(spectral_radius_default(&m), Err(Error::NegativeEntry(0, 1)));
    }

    #[test]
    fn perron_vector_checks() {
        let k5 = scaled_pattern(5, 0.4);
        let x = perron_vector(&k5).unwrap();
        for v in &x {
            assert!((v - 1.0 / 5f64.sqrt()).abs() < 1e-12);
        }
        let block = SymmetricMatrix::from_fn(4, |i, j| (i != j && i / 2 == j / 2) as u8 as f64);
        assert_eq!(perron_vector(&block), Err(Error::Reducible));
    }

    #[test]
    fn rayleigh_examples() {
        let m = SymmetricMatrix::from_fn(4, |i, j| if i == j { 0.0 } else { (i + j) as f64 });
        let ones = vec![1.0; 4];
        let expected = (0..4).map(|i| m.row_sum(i)).sum::<f64>() / 4.0;
        assert!((rayleigh_quotient(&m, &ones).unwrap() - expected).abs() < 1e-12);
        assert_eq!(rayleigh_quotient(&m, &[0.0, 1.0, 0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(rayleigh_quotient(&m, &[0.0; 4]), Err(Error::ZeroVector));
        let x = perron_vector(&m).unwrap();
        let rho = eigen_symmetric(&m).unwrap().lambda_max();
        assert!((rayleigh_quotient(&m, &x).unwrap() - rho).abs() < 1e-10);
    }

    #[test]
    fn dominance() {
        let a = scaled_pattern(3, 1.0);
        assert!(dominance_holds(&a, &a).unwrap());
        let mut rows = vec![
            vec![0.0, 1.0, 1.0],
            vec![1.0, 0.0, 1.0],
            vec![1.0, 1.0, 0.0],
        ];
        rows[0][1] = 0.5;
        rows[1][0] = 0.5;
        let smaller = SymmetricMatrix::from_rows(&rows).unwrap();
        assert!(!dominance_holds(&smaller, &a).unwrap());
        assert!(dominance_holds(&a, &smaller).unwrap());
        assert!(dominance_holds(&a, &scaled_pattern(2, 1.0)).is_err());
    }
}
