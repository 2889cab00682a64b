//! Closed-form bounds and spectral radii, and the explicit quotient matrices
//! of the extremal families.
//!
//! Every quotient constructor returns the matrix already divided by `C(n, 2)`,
//! with the natural consecutive-block partition of the matching family graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexPartition;
use crate::numfmt::{ser_f64, ser_opt_f64};
use crate::spectral::QuotientMatrix;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn pairs(n: usize) -> f64 {
    (n * (n - 1) / 2) as f64
}

fn check_alpha(n: usize, alpha: usize) -> Result<()> {
    if n < 2 || alpha == 0 || 2 * alpha > n {
        return Err(invalid(format!(
            "need n >= 2 and 1 <= alpha <= n/2, got n={n}, alpha={alpha}"
        )));
    }
    Ok(())
}

/// `4α′/n`.
pub fn bound_main(n: usize, alpha: usize) -> Result<f64> {
    check_alpha(n, alpha)?;
    Ok(4.0 * alpha as f64 / n as f64)
}

/// `(n − α′)(4α′ − 2) / (n(n − 1))`, for bipartite graphs.
pub fn bound_bipartite(n: usize, alpha: usize) -> Result<f64> {
    check_alpha(n, alpha)?;
    let (n, a) = (n as f64, alpha as f64);
    Ok((n - a) * (4.0 * a - 2.0) / (n * (n - 1.0)))
}

/// `2α′`, the upper bound on the average connectivity.
pub fn bound_ko(alpha: usize) -> f64 {
    2.0 * alpha as f64
}

/// Per-bound equality flags, judged on the integer-scaled matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct EqualityFlags {
    /// `ρ = 2κ̄/n`.
    pub thm12_lower: bool,
    /// `ρ = T(G)`.
    pub thm12_upper: bool,
    /// `κ̄ = 2α′`.
    pub thm13: bool,
    /// `ρ = 4α′/n`.
    pub thm14: bool,
    /// `ρ = (n − α′)(4α′ − 2)/(n(n − 1))`; false for non-bipartite graphs.
    pub thm15: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    /// `2κ̄/n`.
    #[serde(serialize_with = "ser_f64")]
    pub thm12_lower: f64,
    /// `T(G)`.
    #[serde(serialize_with = "ser_f64")]
    pub thm12_upper: f64,
    /// `2α′`.
    #[serde(serialize_with = "ser_f64")]
    pub thm13_bound: f64,
    /// `4α′/n`.
    #[serde(serialize_with = "ser_f64")]
    pub thm14_bound: f64,
    /// Bipartite bound; `None` for non-bipartite graphs.
    #[serde(serialize_with = "ser_opt_f64")]
    pub thm15_bound: Option<f64>,
    #[serde(serialize_with = "ser_f64")]
    pub rho: f64,
    pub equality_flags: EqualityFlags,
}

/// `2(n − 1)/n`.
pub fn rho_complete(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(invalid("rho_complete needs n >= 2"));
    }
    Ok(2.0 * (n as f64 - 1.0) / n as f64)
}

/// Spectral radius of `A_κ̄(K_{k,n−k})`.
///
/// The closed form presumes `k ≤ n − k`; larger `k` is replaced by `n − k`,
/// which names the same graph.
pub fn rho_complete_bipartite(n: usize, k: usize) -> Result<f64> {
    if k == 0 || k >= n {
        return Err(invalid(format!("need 1 <= k <= n-1, got n={n}, k={k}")));
    }
    let (n, k) = (n as f64, k.min(n - k) as f64);
    let radicand = n * n + 4.0 * n * k.powi(3) - 4.0 * n * k - 4.0 * k.powi(4) + 4.0 * k * k;
    Ok((radicand.sqrt() + 2.0 * n * k - n - 2.0 * k * k) / (n * (n - 1.0)))
}

fn check_family(n: usize, t: usize) -> Result<()> {
    if t < 2 || n < t + 2 {
        return Err(invalid(format!(
            "need t >= 2 and n >= t + 2, got n={n}, t={t}"
        )));
    }
    Ok(())
}

/// Whether `(n, t)` lies in the range where `G₁` is the extremal graph.
pub fn g1_hypothesis(n: usize, t: usize) -> bool {
    t >= 2 && n >= 3 * t + 2
}

/// Whether `(n, t)` lies in the range where `G₂` is the extremal graph.
pub fn g2_hypothesis(n: usize, t: usize) -> bool {
    t >= 2 && n >= t + 2 && n <= 3 * t && (n - t).is_multiple_of(2)
}

/// Spectral radius of `A_κ̄(K_1 ∨ (K_{n−t−1} ∪ \bar K_t))`.
///
/// Defined for every `n ≥ t + 2`; see [`g1_hypothesis`] for the range in
/// which the family is extremal.
pub fn rho_g1(n: usize, t: usize) -> Result<f64> {
    check_family(n, t)?;
    let (n, t) = (n as f64, t as f64);
    let radicand = n.powi(4) - 4.0 * n.powi(3) * t - 4.0 * n.powi(3)
        + 6.0 * n * n * t * t
        + 10.0 * n * n * t
        + 8.0 * n * n
        - 4.0 * n * t.powi(3)
        - 8.0 * n * t * t
        - 8.0 * n * t
        - 8.0 * n
        + t.powi(4)
        + 2.0 * t.powi(3)
        + t * t
        + 4.0 * t
        + 4.0;
    let root = 3.0 * t / 2.0 - n - n * t + n * n / 2.0 + t * t / 2.0 + radicand.sqrt() / 2.0;
    Ok(root / (n * (n - 1.0) / 2.0))
}

/// Spectral radius of `A_κ̄(K_{(n−t)/2} ∨ \bar K_{(n+t)/2})`.
pub fn rho_g2(n: usize, t: usize) -> Result<f64> {
    check_family(n, t)?;
    if !(n - t).is_multiple_of(2) {
        return Err(invalid(format!("g2 needs n = t mod 2, got n={n}, t={t}")));
    }
    let (n, t) = (n as f64, t as f64);
    let radicand = 5.0 * n.powi(4) - 12.0 * n.powi(3) * t - 8.0 * n.powi(3)
        + 6.0 * n * n * t * t
        + 16.0 * n * n * t
        + 24.0 * n * n
        + 4.0 * n * t.powi(3)
        - 8.0 * n * t * t
        - 16.0 * n * t
        - 32.0 * n
        - 3.0 * t.powi(4)
        + 8.0 * t * t
        + 16.0;
    let root =
        t / 2.0 - n - n * t / 4.0 + 3.0 * n * n / 8.0 - t * t / 8.0 + 0.5 + radicand.sqrt() / 8.0;
    Ok(root / (n * (n - 1.0) / 2.0))
}

fn quotient(n: usize, rows: Vec<Vec<f64>>, sizes: &[usize]) -> Result<QuotientMatrix> {
    let p = VertexPartition::from_sizes(sizes)?;
    debug_assert_eq!(p.order(), n);
    Ok(QuotientMatrix::from_rows(&rows, p)?.scaled(1.0 / pairs(n)))
}

/// Quotient of `K_s ∨ (K_{n−2s−t+1} ∪ \bar K_{t+s−1})` over
/// `{K_s, K_{n−2s−t+1}, \bar K_{t+s−1}}`.
pub fn quotient_q0(n: usize, s: usize, t: usize) -> Result<QuotientMatrix> {
    if s == 0 || t < 2 || n + 1 < 2 * s + t + 1 {
        return Err(invalid(format!(
            "q0 needs s >= 1, t >= 2 and 2s <= n - t, got n={n}, s={s}, t={t}"
        )));
    }
    let (nf, sf, tf) = (n as f64, s as f64, t as f64);
    let rows = vec![
        vec![
            (nf - 1.0) * (sf - 1.0),
            (nf - sf - tf) * (nf - 2.0 * sf - tf + 1.0),
            sf * (sf + tf - 1.0),
        ],
        vec![
            (nf - sf - tf) * sf,
            (nf - sf - tf) * (nf - 2.0 * sf - tf),
            sf * (sf + tf - 1.0),
        ],
        vec![
            sf * sf,
            sf * (nf - 2.0 * sf - tf + 1.0),
            sf * (sf + tf - 2.0),
        ],
    ];
    quotient(n, rows, &[s, n - 2 * s - t + 1, t + s - 1])
}

/// Quotient of `G₁` over `{K_1, K_{n−t−1}, \bar K_t}`.
pub fn quotient_q1(n: usize, t: usize) -> Result<QuotientMatrix> {
    check_family(n, t)?;
    let (nf, tf) = (n as f64, t as f64);
    let m = nf - tf - 1.0;
    let rows = vec![
        vec![0.0, m * m, tf],
        vec![m, m * (nf - tf - 2.0), tf],
        vec![1.0, m, tf - 1.0],
    ];
    quotient(n, rows, &[1, n - t - 1, t])
}

/// Quotient of `G₂` over `{K_{(n−t)/2}, \bar K_{(n+t)/2}}`.
pub fn quotient_q2(n: usize, t: usize) -> Result<QuotientMatrix> {
    check_family(n, t)?;
    if !(n - t).is_multiple_of(2) {
        return Err(invalid(format!("q2 needs n = t mod 2, got n={n}, t={t}")));
    }
    let (nf, tf) = (n as f64, t as f64);
    let rows = vec![
        vec![
            (nf - 1.0) * (nf - tf - 2.0) / 2.0,
            (nf * nf - tf * tf) / 4.0,
        ],
        vec![(nf - tf).powi(2) / 4.0, (nf - tf) * (nf + tf - 2.0) / 4.0],
    ];
    quotient(n, rows, &[(n - t) / 2, (n + t) / 2])
}

/// Quotient of `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_q})` over `{K_s, K_{n_1}, ..., K_{n_q}}`,
/// a `(q + 1) × (q + 1)` matrix.
pub fn quotient_split(s: usize, parts: &[usize]) -> Result<QuotientMatrix> {
    if s == 0 || parts.is_empty() || parts.contains(&0) {
        return Err(invalid("split quotient needs s >= 1 and non-empty parts"));
    }
    let n = s + parts.iter().sum::<usize>();
    let q = parts.len();
    let (nf, sf) = (n as f64, s as f64);
    let mut rows = vec![vec![0.0; q + 1]; q + 1];
    rows[0][0] = (nf - 1.0) * (sf - 1.0);
    for (i, &ni) in parts.iter().enumerate() {
        let ni = ni as f64;
        // Vertices of K_{n_i} have degree s + n_i − 1, which is κ towards
        // K_s and within the clique.
        let deg = sf + ni - 1.0;
        rows[0][i + 1] = deg * ni;
        rows[i + 1][0] = deg * sf;
        for (j, &nj) in parts.iter().enumerate() {
            rows[i + 1][j + 1] = if i == j {
                deg * (ni - 1.0)
            } else {
                sf * nj as f64
            };
        }
    }
    let mut sizes = vec![s];
    sizes.extend_from_slice(parts);
    quotient(n, rows, &sizes)
}

/// Quotient of `K_{k,n−k}` over its two sides, `k`-side first.
pub fn quotient_bipartite(n: usize, k: usize) -> Result<QuotientMatrix> {
    if k == 0 || k >= n {
        return Err(invalid(format!("need 1 <= k <= n-1, got n={n}, k={k}")));
    }
    let (nf, kf) = (n as f64, k as f64);
    let m = k.min(n - k) as f64;
    let rows = vec![
        vec![(nf - kf) * (kf - 1.0), (nf - kf) * m],
        vec![kf * m, kf * (nf - kf - 1.0)],
    ];
    quotient(n, rows, &[k, n - k])
}

/// `n_s ≤ x − s` (case 1) or `n_s > x − s` (case 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GStarCase {
    One,
    Two,
}

impl GStarCase {
    pub fn of(s: usize, n_s: usize, x: usize) -> Self {
        if n_s + s <= x {
            GStarCase::One
        } else {
            GStarCase::Two
        }
    }
}

fn check_gstar(s: usize, n_s: usize, x: usize, y: usize) -> Result<()> {
    if n_s == 0 || n_s > s || s >= x || x > y || n_s >= y {
        return Err(invalid(format!(
            "gstar quotient needs 1 <= n_s <= s < x <= y and n_s < y, got s={s}, n_s={n_s}, x={x}, y={y}"
        )));
    }
    Ok(())
}

/// Quotient of `G*` over `{S, N(S), X − S, Y − N(S)}`.
pub fn quotient_gstar(
    s: usize,
    n_s: usize,
    x: usize,
    y: usize,
    case: GStarCase,
) -> Result<QuotientMatrix> {
    check_gstar(s, n_s, x, y)?;
    if GStarCase::of(s, n_s, x) != case {
        return Err(invalid(format!(
            "case {case:?} inconsistent with n_s={n_s}, x-s={}",
            x - s
        )));
    }
    let (sf, nsf, xf, yf) = (s as f64, n_s as f64, x as f64, y as f64);
    let xs = xf - sf;
    let yn = yf - nsf;
    let m = nsf.min(xs);
    let rows = vec![
        vec![(sf - 1.0) * nsf, nsf * nsf, xs * nsf, yn * m],
        vec![sf * nsf, (nsf - 1.0) * xf, xs * (nsf + xs - 1.0), yn * xs],
        vec![sf * nsf, nsf * (xs + nsf - 1.0), (xs - 1.0) * yf, yn * xs],
        vec![sf * m, nsf * xs, xs * xs, (yn - 1.0) * xs],
    ];
    quotient(x + y, rows, &[s, n_s, x - s, y - n_s])
}

/// Case-1 quotient after moving one vertex from `S` to `Y − N(S)`, which is
/// the `G*` quotient for `(s − 1, n_s, x − 1, y + 1)`.
pub fn quotient_gstar_moved(s: usize, n_s: usize, x: usize, y: usize) -> Result<QuotientMatrix> {
    check_gstar(s, n_s, x, y)?;
    if GStarCase::of(s, n_s, x) != GStarCase::One || s == n_s {
        return Err(invalid(format!(
            "moving a vertex out of S needs n_s < s and n_s <= x - s, got s={s}, n_s={n_s}, x={x}"
        )));
    }
    let (sf, nsf, xf, yf) = (s as f64, n_s as f64, x as f64, y as f64);
    let xs = xf - sf;
    let rows = vec![
        vec![
            (sf - 2.0) * nsf,
            nsf * nsf,
            xs * nsf,
            (yf - nsf + 1.0) * nsf,
        ],
        vec![
            (sf - 1.0) * nsf,
            (nsf - 1.0) * (xf - 1.0),
            xs * (nsf + xs - 1.0),
            (yf - nsf + 1.0) * xs,
        ],
        vec![
            (sf - 1.0) * nsf,
            nsf * (xs + nsf - 1.0),
            (xs - 1.0) * (yf + 1.0),
            (yf - nsf + 1.0) * xs,
        ],
        vec![(sf - 1.0) * nsf, nsf * xs, xs * xs, (yf - nsf) * xs],
    ];
    quotient(x + y, rows, &[s - 1, n_s, x - s, y + 1 - n_s])
}
