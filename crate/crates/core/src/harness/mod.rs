//! Whole-graph analysis, exhaustive sweeps and grid verification of the
//! family-level inequalities.

mod claims;
mod sweep;

pub use claims::{verify_claims, ClaimResult};
pub use sweep::{
    sweep_exhaustive, sweep_exhaustive_with, EqualityCases, MaxRho, SweepRecord, SweepSummary,
    Violation, SWEEP_MAX_ORDER,
};

use serde::Serialize;

use crate::bounds::{BoundReport, EqualityFlags};
use crate::connectivity::ConnectivityProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::maximum_matching;
use crate::numfmt::ser_f64;
use crate::spectral::eigen_symmetric;

/// Slack allowed when checking a bound inequality.
pub const BOUND_TOL: f64 = 1e-9;

/// Relative tolerance for equality between the scaled radius and a scaled bound.
pub const EQUALITY_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub bipartite: bool,
    pub alpha_prime: usize,
    pub deficiency: usize,
    #[serde(serialize_with = "ser_f64")]
    pub kappa_bar: f64,
    #[serde(serialize_with = "ser_f64")]
    pub rho: f64,
    #[serde(serialize_with = "ser_f64")]
    pub transmission_max: f64,
    pub bounds: BoundReport,
    pub equality_flags: EqualityFlags,
}

impl AnalysisReport {
    /// Names of the bounds this report violates by more than [`BOUND_TOL`].
    pub fn violations(&self) -> Vec<&'static str> {
        let b = &self.bounds;
        let mut out = Vec::new();
        if self.rho < b.thm12_lower - BOUND_TOL {
            out.push("thm12_lower");
        }
        if self.rho > b.thm12_upper + BOUND_TOL {
            out.push("thm12_upper");
        }
        if self.kappa_bar > b.thm13_bound + BOUND_TOL {
            out.push("thm13");
        }
        if self.rho > b.thm14_bound + BOUND_TOL {
            out.push("thm14");
        }
        if matches!(b.thm15_bound, Some(t) if self.rho > t + BOUND_TOL) {
            out.push("thm15");
        }
        out
    }

    /// Pretty JSON; identical inputs give byte-identical output.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn rel_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= EQUALITY_REL_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Every quantity and bound for a connected graph with `n ≥ 2`.
pub fn analyze(g: &Graph) -> Result<AnalysisReport> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidSize("analysis needs n >= 2".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let profile = ConnectivityProfile::compute(g)?;
    let matching = maximum_matching(g);
    let alpha = matching.alpha_prime;
    let bipartite = g.bipartition().is_some();

    // Work on the matrix of raw κ values; every bound scaled by C(n, 2) is
    // then a ratio of small integers.
    let pairs = (n * (n - 1) / 2) as f64;
    let kappa = &profile.kappa;
    let scaled_rho = eigen_symmetric(&kappa.to_scaled_matrix())?.lambda_max();
    let pair_sum = kappa.pair_sum();
    let max_row = (0..n).map(|v| kappa.row_sum(v)).max().unwrap_or(0);
    let (nf, af) = (n as f64, alpha as f64);

    let scaled_lower = 2.0 * pair_sum as f64 / nf;
    let scaled_thm14 = 2.0 * af * (nf - 1.0);
    let scaled_thm15 = (nf - af) * (2.0 * af - 1.0);
    let flags = EqualityFlags {
        thm12_lower: rel_eq(scaled_rho, scaled_lower),
        thm12_upper: rel_eq(scaled_rho, max_row as f64),
        thm13: pair_sum == 2 * alpha as u64 * (n * (n - 1) / 2) as u64,
        thm14: rel_eq(scaled_rho, scaled_thm14),
        thm15: bipartite && rel_eq(scaled_rho, scaled_thm15),
    };
    let rho = scaled_rho / pairs;
    let bounds = BoundReport {
        thm12_lower: scaled_lower / pairs,
        thm12_upper: profile.transmission_max,
        thm13_bound: crate::bounds::bound_ko(alpha),
        thm14_bound: 4.0 * af / nf,
        thm15_bound: bipartite.then(|| (nf - af) * (4.0 * af - 2.0) / (nf * (nf - 1.0))),
        rho,
        equality_flags: flags,
    };
    Ok(AnalysisReport {
        n,
        m: g.size(),
        bipartite,
        alpha_prime: alpha,
        deficiency: matching.deficiency,
        kappa_bar: profile.kappa_bar,
        rho,
        transmission_max: profile.transmission_max,
        bounds,
        equality_flags: flags,
    })
}
