//! Parameter-grid checks of the family-level inequalities behind the bounds.
//!
//! Each check reports its worst margin. For inequalities `lhs ≤ rhs` the
//! margin is `rhs − lhs`; for agreements it is `−|a − b|`. A non-strict check
//! passes when the margin is at least `−tol`, a strict one when it is positive.

use serde::Serialize;

use crate::bounds::{
    bound_bipartite, quotient_bipartite, quotient_gstar, quotient_q0, quotient_q1, quotient_q2,
    quotient_split, rho_complete, rho_complete_bipartite, rho_g1, rho_g2, GStarCase,
};
use crate::connectivity::ConnectivityProfile;
use crate::error::Result;
use crate::graph::{
    complete, complete_bipartite, g1_family, g2_family, gstar_family, split_family, GStar, Graph,
};
use crate::numfmt::ser_f64;
use crate::spectral::{
    eigen_symmetric, is_equitable, quotient_matrix, QuotientMatrix, SymmetricMatrix,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    #[serde(serialize_with = "ser_f64")]
    pub worst_margin: f64,
    /// Parameters of the case with the worst margin.
    pub worst_case: String,
}

#[derive(Clone, Copy, PartialEq)]
enum Kind {
    NonStrict,
    Strict,
}

struct Tally {
    name: &'static str,
    kind: Kind,
    cases: usize,
    worst: f64,
    worst_case: String,
}

impl Tally {
    fn new(name: &'static str, kind: Kind) -> Self {
        Tally {
            name,
            kind,
            cases: 0,
            worst: f64::INFINITY,
            worst_case: String::new(),
        }
    }

    fn record(&mut self, margin: f64, case: impl FnOnce() -> String) {
        self.cases += 1;
        // NaN margins count as the worst possible.
        if margin.is_nan() || margin < self.worst {
            self.worst = if margin.is_nan() {
                f64::NEG_INFINITY
            } else {
                margin
            };
            self.worst_case = case();
        }
    }

    fn finish(self, tol: f64) -> ClaimResult {
        let passed = self.cases > 0
            && match self.kind {
                Kind::NonStrict => self.worst >= -tol,
                Kind::Strict => self.worst > 0.0,
            };
        ClaimResult {
            name: self.name,
            passed,
            cases: self.cases,
            worst_margin: self.worst,
            worst_case: self.worst_case,
        }
    }
}

fn kappa_matrix(g: &Graph) -> Result<SymmetricMatrix> {
    Ok(ConnectivityProfile::compute(g)?.matrix())
}

fn graph_rho(g: &Graph) -> Result<f64> {
    Ok(eigen_symmetric(&kappa_matrix(g)?)?.lambda_max())
}

/// Nonincreasing sequences of odd parts in `min..`, of length `2..=max_len`,
/// summing to at most `budget`.
fn odd_partitions(budget: usize, min: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn walk(
        left: usize,
        cap: usize,
        min: usize,
        max_len: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        let mut p = min;
        while p <= cap.min(left) {
            cur.push(p);
            walk(left - p, p, min, max_len, cur, out);
            cur.pop();
            p += 2;
        }
    }
    let mut out = Vec::new();
    walk(budget, budget, min, max_len, &mut Vec::new(), &mut out);
    out
}

const SPLIT_MAX_ORDER: usize = 30;
const SPLIT_MAX_S: usize = 4;
const SPLIT_MAX_PARTS: usize = 6;
const FAMILY_MAX_ORDER: usize = 40;
const BIPARTITE_MAX_ORDER: usize = 50;
const GSTAR_MAX_ORDER: usize = 14;
const EQUITABLE_MAX_ORDER: usize = 16;

/// Split-family configurations `(s, parts)` with odd parts of at least `min`.
fn split_grid(min: usize) -> Vec<(usize, Vec<usize>)> {
    (1..=SPLIT_MAX_S)
        .flat_map(|s| {
            odd_partitions(SPLIT_MAX_ORDER - s, min, SPLIT_MAX_PARTS)
                .into_iter()
                .map(move |p| (s, p))
        })
        .collect()
}

/// `(s, n_s, x, y)` admitted by the `G*` quotient with `x + y ≤ max_n`.
fn gstar_grid(max_n: usize) -> Vec<GStar> {
    let mut out = Vec::new();
    for x in 2..max_n {
        for y in x..=max_n - x {
            for s in 1..x {
                for n_s in 1..=s.min(y - 1) {
                    out.push(GStar { s, n_s, x, y });
                }
            }
        }
    }
    out
}

fn complete_radius(tol: f64) -> Result<ClaimResult> {
    let mut t = Tally::new("complete_graph_radius", Kind::NonStrict);
    for n in 2..=BIPARTITE_MAX_ORDER {
        let numeric = graph_rho(&complete(n)?)?;
        t.record(-(numeric - rho_complete(n)?).abs(), || format!("n={n}"));
    }
    Ok(t.finish(tol))
}

fn split_move_monotone(tol: f64) -> Result<ClaimResult> {
    let mut t = Tally::new("split_move_monotone", Kind::NonStrict);
    for (s, parts) in split_grid(3) {
        let n = s + parts.iter().sum::<usize>();
        let mut moved = parts.clone();
        moved[0] += 2;
        *moved.last_mut().expect("two or more parts") -= 2;
        let before = graph_rho(&split_family(n, s, &parts)?)?;
        let after = graph_rho(&split_family(n, s, &moved)?)?;
        t.record(after - before, || format!("s={s}, parts={parts:?}"));
    }
    Ok(t.finish(tol))
}

/// Perron entries of the clique blocks follow the clique sizes, including
/// configurations with singleton parts.
fn split_perron_ordering(tol: f64) -> Result<ClaimResult> {
    let mut t = Tally::new("split_perron_ordering", Kind::NonStrict);
    for (s, parts) in split_grid(1) {
        let (_, x) = quotient_split(s, &parts)?.perron(1e-14)?;
        let scale = x.iter().copied().fold(0.0, f64::max);
        for i in 1..parts.len() {
            t.record((x[i] - x[i + 1]) / scale, || {
                format!("s={s}, parts={parts:?}, i={i}")
            });
        }
    }
    Ok(t.finish(tol))
}

/// Moving two vertices into the largest clique, from any clique of size at
/// least three, with singleton parts allowed.
fn split_move_any(tol: f64) -> Result<ClaimResult> {
    let mut t = Tally::new("split_move_monotone_with_singletons", Kind::NonStrict);
    for (s, parts) in split_grid(1) {
        let before = quotient_split(s, &parts)?.spectral_radius()?;
        for i in 1..parts.len() {
            if parts[i] < 3 {
                continue;
            }
            let mut moved = parts.clone();
            moved[0] += 2;
            moved[i] -= 2;
            let after = quotient_split(s, &moved)?.spectral_radius()?;
            t.record(after - before, || {
                format!("s={s}, parts={parts:?}, from={i}")
            });
        }
    }
    Ok(t.finish(tol))
}

fn q0_against(
    tol: f64,
    name: &'static str,
    in_range: fn(usize, usize) -> bool,
    top: fn(usize, usize) -> Result<QuotientMatrix>,
) -> Result<ClaimResult> {
    let mut tally = Tally::new(name, Kind::NonStrict);
    for t in 2..FAMILY_MAX_ORDER {
        for n in (t + 2..=FAMILY_MAX_ORDER).step_by(2) {
            if !in_range(n, t) {
                continue;
            }
            let bound = top(n, t)?.spectral_radius()?;
            for s in 1..=(n - t) / 2 {
                let r = quotient_q0(n, s, t)?.spectral_radius()?;
                tally.record(bound - r, || format!("n={n}, s={s}, t={t}"));
            }
        }
    }
    Ok(tally.finish(tol))
}

fn family_grid(in_range: fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    (2..FAMILY_MAX_ORDER)
        .flat_map(|t| (t + 2..=FAMILY_MAX_ORDER).step_by(2).map(move |n| (n, t)))
        .filter(|&(n, t)| in_range(n, t))
        .collect()
}

fn g1_range(n: usize, t: usize) -> bool {
    n >= 3 * t + 2
}

fn g2_range(n: usize, t: usize) -> bool {
    n <= 3 * t
}

fn family_strict(
    tol: f64,
    name: &'static str,
    grid: &[(usize, usize)],
    rho: fn(usize, usize) -> Result<f64>,
) -> Result<ClaimResult> {
    let mut tally = Tally::new(name, Kind::Strict);
    for &(n, t) in grid {
        let bound = 2.0 * (n - t) as f64 / n as f64;
        tally.record(bound - rho(n, t)?, || format!("n={n}, t={t}"));
    }
    Ok(tally.finish(tol))
}

fn family_closed_form(
    tol: f64,
    name: &'static str,
    grid: &[(usize, usize)],
    rho: fn(usize, usize) -> Result<f64>,
    family: fn(usize, usize) -> Result<Graph>,
) -> Result<ClaimResult> {
    let mut tally = Tally::new(name, Kind::NonStrict);
    for &(n, t) in grid {
        let numeric = graph_rho(&family(n, t)?)?;
        tally.record(-(numeric - rho(n, t)?).abs(), || format!("n={n}, t={t}"));
    }
    Ok(tally.finish(tol))
}

fn complete_bipartite_bounds(tol: f64) -> Result<[ClaimResult; 2]> {
    let mut upper = Tally::new("complete_bipartite_upper", Kind::NonStrict);
    let mut lower = Tally::new("complete_bipartite_lower", Kind::NonStrict);
    for n in 2..=BIPARTITE_MAX_ORDER {
        for k in 1..=n / 2 {
            let r = rho_complete_bipartite(n, k)?;
            upper.record(bound_bipartite(n, k)? - r, || format!("n={n}, k={k}"));
            lower.record(r - 2.0 * k as f64 / n as f64, || format!("n={n}, k={k}"));
        }
    }
    Ok([upper.finish(tol), lower.finish(tol)])
}

fn gstar_move_monotone(tol: f64) -> Result<ClaimResult> {
    let mut t = Tally::new("gstar_move_monotone", Kind::NonStrict);
    for p in gstar_grid(GSTAR_MAX_ORDER) {
        let GStar { s, n_s, x, y } = p;
        if GStarCase::of(s, n_s, x) != GStarCase::One || s == n_s {
            continue;
        }
        let before = graph_rho(&gstar_family(s, n_s, x, y)?.0)?;
        let after = graph_rho(&gstar_family(s - 1, n_s, x - 1, y + 1)?.0)?;
        t.record(after - before, || format!("{p:?}"));
    }
    Ok(t.finish(tol))
}

fn gstar_case2_row_sums(tol: f64) -> Result<ClaimResult> {
    let mut t = Tally::new("gstar_case2_row_sums", Kind::NonStrict);
    for p in gstar_grid(2 * GSTAR_MAX_ORDER) {
        let GStar { s, n_s, x, y } = p;
        if GStarCase::of(s, n_s, x) != GStarCase::Two {
            continue;
        }
        let q = quotient_gstar(s, n_s, x, y, GStarCase::Two)?;
        let k = (x - s + n_s) as f64;
        let bound = 2.0 * k / (x + y) as f64;
        let worst_row = (0..4)
            .map(|i| q.row_sum(i))
            .fold(f64::NEG_INFINITY, f64::max);
        t.record(bound - worst_row, || format!("{p:?}"));
    }
    Ok(t.finish(tol))
}

/// The natural partition of a family graph is equitable, its numeric quotient
/// equals the printed one, and the two radii agree.
fn equitable_quotients(tol: f64) -> Result<ClaimResult> {
    let mut t = Tally::new("equitable_quotients", Kind::NonStrict);
    let mut check = |g: &Graph, printed: QuotientMatrix, case: String| -> Result<()> {
        let a = kappa_matrix(g)?;
        let p = printed.partition().clone();
        let numeric = quotient_matrix(&a, &p)?;
        let equitable = is_equitable(&a, &p, tol);
        let rho_a = eigen_symmetric(&a)?.lambda_max();
        let rho_q = printed.spectral_radius()?;
        let miss = numeric.max_abs_diff(&printed).max((rho_a - rho_q).abs());
        t.record(if equitable { -miss } else { f64::NEG_INFINITY }, || case);
        Ok(())
    };
    for n in 2..=EQUITABLE_MAX_ORDER {
        for k in 1..n {
            let g = complete_bipartite(k, n - k)?.0;
            check(
                &g,
                quotient_bipartite(n, k)?,
                format!("K_{{{k},{}}}", n - k),
            )?;
        }
    }
    for t in 2..EQUITABLE_MAX_ORDER {
        for n in (t + 2..=EQUITABLE_MAX_ORDER).step_by(2) {
            check(
                &g1_family(n, t)?,
                quotient_q1(n, t)?,
                format!("g1 n={n}, t={t}"),
            )?;
            check(
                &g2_family(n, t)?,
                quotient_q2(n, t)?,
                format!("g2 n={n}, t={t}"),
            )?;
            for s in 1..=(n - t) / 2 {
                let mut parts = vec![n - 2 * s - t + 1];
                parts.extend(std::iter::repeat_n(1, t + s - 1));
                let g = split_family(n, s, &parts)?;
                check(&g, quotient_q0(n, s, t)?, format!("q0 n={n}, s={s}, t={t}"))?;
            }
        }
    }
    for (s, parts) in split_grid(1) {
        let n = s + parts.iter().sum::<usize>();
        if n <= EQUITABLE_MAX_ORDER {
            let g = split_family(n, s, &parts)?;
            check(
                &g,
                quotient_split(s, &parts)?,
                format!("split s={s}, parts={parts:?}"),
            )?;
        }
    }
    for p in gstar_grid(EQUITABLE_MAX_ORDER) {
        let GStar { s, n_s, x, y } = p;
        let g = gstar_family(s, n_s, x, y)?.0;
        let q = quotient_gstar(s, n_s, x, y, GStarCase::of(s, n_s, x))?;
        check(&g, q, format!("{p:?}"))?;
    }
    Ok(t.finish(tol))
}

/// Runs every grid check. Failures are reported in the results, not as errors.
pub fn verify_claims(tol: f64) -> Result<Vec<ClaimResult>> {
    let g1 = family_grid(g1_range);
    let g2 = family_grid(g2_range);
    let [upper, lower] = complete_bipartite_bounds(tol)?;
    Ok(vec![
        complete_radius(tol)?,
        split_move_monotone(tol)?,
        split_perron_ordering(tol)?,
        split_move_any(tol)?,
        q0_against(tol, "q0_below_q1", g1_range, quotient_q1)?,
        q0_against(tol, "q0_below_q2", g2_range, quotient_q2)?,
        family_strict(tol, "g1_strict_bound", &g1, rho_g1)?,
        family_closed_form(tol, "g1_closed_form", &g1, rho_g1, g1_family)?,
        family_strict(tol, "g2_strict_bound", &g2, rho_g2)?,
        family_closed_form(tol, "g2_closed_form", &g2, rho_g2, g2_family)?,
        upper,
        lower,
        gstar_move_monotone(tol)?,
        gstar_case2_row_sums(tol)?,
        equitable_quotients(tol)?,
    ])
}
