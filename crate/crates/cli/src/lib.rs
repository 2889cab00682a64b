//! Command-line driver: argument parsing, subcommand dispatch and output.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use avgconn::bounds::{
    quotient_bipartite, quotient_gstar, quotient_q1, quotient_q2, quotient_split, rho_complete,
    rho_complete_bipartite, rho_g1, rho_g2, GStarCase,
};
use avgconn::graph::{
    complete, complete_bipartite, g1_family, g2_family, gstar_family, parse_edge_list,
    parse_graph6_lines, split_family,
};
use avgconn::harness::{
    analyze, sweep_exhaustive_with, verify_claims, AnalysisReport, SweepRecord,
};
use avgconn::numfmt::round_sig15;
use avgconn::Graph;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "avgconn",
    version,
    about = "Average connectivity matrix spectra and matching bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report every quantity and bound for each graph in a file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        json: bool,
    },
    /// Check the bounds on every labeled connected graph of one order.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bipartite_only: bool,
        /// Write one row per graph to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Analyze a member of a named family, next to its closed forms.
    Extremal {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated `key=value` pairs; split parts are colon-separated.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the parameter-grid checks.
    Verify {
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Kn,
    Kab,
    G1,
    G2,
    Split,
    Gstar,
}

/// Failure modes that map onto exit codes.
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<avgconn::Error> for Failure {
    fn from(e: avgconn::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze {
            input,
            format,
            json,
        } => cmd_analyze(&input, format, json, out),
        Command::Sweep {
            n,
            bipartite_only,
            csv,
            json,
        } => cmd_sweep(n, bipartite_only, csv.as_ref(), json, out, err),
        Command::Extremal {
            family,
            params,
            json,
        } => cmd_extremal(family, &params, json, out),
        Command::Verify { tol, json } => cmd_verify(tol, json, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn write_report_text(r: &AnalysisReport, out: &mut dyn Write) -> std::io::Result<()> {
    let b = &r.bounds;
    let f = &r.equality_flags;
    writeln!(out, "n                 {}", r.n)?;
    writeln!(out, "m                 {}", r.m)?;
    writeln!(out, "bipartite         {}", r.bipartite)?;
    writeln!(out, "alpha_prime       {}", r.alpha_prime)?;
    writeln!(out, "deficiency        {}", r.deficiency)?;
    writeln!(out, "kappa_bar         {}", round_sig15(r.kappa_bar))?;
    writeln!(out, "rho               {}", round_sig15(r.rho))?;
    writeln!(out, "transmission_max  {}", round_sig15(r.transmission_max))?;
    writeln!(
        out,
        "2kbar/n <= rho    {} <= {}  equal={}",
        round_sig15(b.thm12_lower),
        round_sig15(r.rho),
        f.thm12_lower
    )?;
    writeln!(
        out,
        "rho <= T(G)       {} <= {}  equal={}",
        round_sig15(r.rho),
        round_sig15(b.thm12_upper),
        f.thm12_upper
    )?;
    writeln!(
        out,
        "kbar <= 2a'       {} <= {}  equal={}",
        round_sig15(r.kappa_bar),
        b.thm13_bound,
        f.thm13
    )?;
    writeln!(
        out,
        "rho <= 4a'/n      {} <= {}  equal={}",
        round_sig15(r.rho),
        round_sig15(b.thm14_bound),
        f.thm14
    )?;
    if let Some(t) = b.thm15_bound {
        writeln!(
            out,
            "rho <= bipartite  {} <= {}  equal={}",
            round_sig15(r.rho),
            round_sig15(t),
            f.thm15
        )?;
    }
    let v = r.violations();
    if !v.is_empty() {
        writeln!(out, "VIOLATED          {}", v.join(", "))?;
    }
    Ok(())
}

fn cmd_analyze(input: &PathBuf, format: Format, json: bool, out: &mut dyn Write) -> Outcome {
    let text = fs::read_to_string(input)?;
    let graphs: Vec<Graph> = match format {
        Format::Graph6 => parse_graph6_lines(&text)?,
        Format::Edgelist => vec![parse_edge_list(&text)?],
    };
    if graphs.is_empty() {
        return Err(Failure::Usage(format!(
            "{} holds no graphs",
            input.display()
        )));
    }
    let reports = graphs.iter().map(analyze).collect::<Result<Vec<_>, _>>()?;
    if json {
        let text = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])
        } else {
            serde_json::to_string_pretty(&reports)
        };
        writeln!(out, "{}", text.expect("reports serialize"))?;
    } else {
        for (i, r) in reports.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            write_report_text(r, out)?;
        }
    }
    let violated = reports.iter().any(|r| !r.violations().is_empty());
    Ok(if violated { EXIT_VIOLATION } else { EXIT_OK })
}

/// One CSV row of a sweep.
#[derive(Serialize)]
struct CsvRow<'a> {
    graph6: &'a str,
    n: usize,
    m: usize,
    alpha_prime: usize,
    kappa_bar: f64,
    rho: f64,
    #[serde(rename = "T_G")]
    t_g: f64,
    thm14_bound: f64,
    thm15_bound: Option<f64>,
    eq_thm12_lower: bool,
    eq_thm12_upper: bool,
    eq_thm13: bool,
    eq_thm14: bool,
    eq_thm15: bool,
}

impl<'a> CsvRow<'a> {
    fn new(rec: &'a SweepRecord) -> Self {
        let r = &rec.report;
        let f = r.equality_flags;
        CsvRow {
            graph6: &rec.graph6,
            n: r.n,
            m: r.m,
            alpha_prime: r.alpha_prime,
            kappa_bar: round_sig15(r.kappa_bar),
            rho: round_sig15(r.rho),
            t_g: round_sig15(r.transmission_max),
            thm14_bound: round_sig15(r.bounds.thm14_bound),
            thm15_bound: r.bounds.thm15_bound.map(round_sig15),
            eq_thm12_lower: f.thm12_lower,
            eq_thm12_upper: f.thm12_upper,
            eq_thm13: f.thm13,
            eq_thm14: f.thm14,
            eq_thm15: f.thm15,
        }
    }
}

fn cmd_sweep(
    n: usize,
    bipartite_only: bool,
    csv_path: Option<&PathBuf>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let mut writer = csv_path.map(csv::Writer::from_path).transpose()?;
    let mut write_error = None;
    let summary = sweep_exhaustive_with(n, bipartite_only, |rec| {
        if let (Some(w), None) = (writer.as_mut(), &write_error) {
            if let Err(e) = w.serialize(CsvRow::new(rec)) {
                write_error = Some(e);
            }
        }
    })?;
    if let Some(e) = write_error {
        return Err(e.into());
    }
    if let Some(mut w) = writer {
        w.flush()?;
    }
    if json {
        let text = serde_json::to_string_pretty(&summary).expect("summary serializes");
        writeln!(out, "{text}")?;
    } else {
        let e = &summary.equality_cases;
        writeln!(out, "n                 {}", summary.n)?;
        writeln!(out, "graphs_checked    {}", summary.graphs_checked)?;
        writeln!(out, "violations        {}", summary.violations.len())?;
        writeln!(out, "equal 2kbar/n     {}", e.thm12_lower.len())?;
        writeln!(out, "equal T(G)        {}", e.thm12_upper.len())?;
        writeln!(out, "equal kbar=2a'    {}", e.thm13.len())?;
        writeln!(out, "equal 4a'/n       {}", e.thm14.len())?;
        writeln!(out, "equal bipartite   {}", e.thm15.len())?;
        for (alpha, best) in &summary.max_rho_by_alpha {
            writeln!(
                out,
                "max rho a'={alpha}     {} {}",
                round_sig15(best.rho),
                best.graph6
            )?;
        }
    }
    for v in &summary.violations {
        writeln!(err, "violation: {} breaks {}", v.graph6, v.bound)?;
    }
    Ok(if summary.violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn parse_params(text: &str) -> Result<BTreeMap<String, String>, Failure> {
    let mut map = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("parameter `{item}` is not key=value")))?;
        if map
            .insert(k.trim().to_string(), v.trim().to_string())
            .is_some()
        {
            return Err(Failure::Usage(format!("parameter `{k}` given twice")));
        }
    }
    Ok(map)
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn get(&self, key: &str) -> Result<usize, Failure> {
        let v = self
            .0
            .get(key)
            .ok_or_else(|| Failure::Usage(format!("missing parameter `{key}`")))?;
        v.parse()
            .map_err(|_| Failure::Usage(format!("parameter `{key}` must be a count, got `{v}`")))
    }

    fn list(&self, key: &str) -> Result<Vec<usize>, Failure> {
        let v = self
            .0
            .get(key)
            .ok_or_else(|| Failure::Usage(format!("missing parameter `{key}`")))?;
        v.split(':')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("bad entry `{p}` in `{key}`")))
            })
            .collect()
    }

    fn only(&self, allowed: &[&str]) -> Result<(), Failure> {
        match self.0.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Failure::Usage(format!(
                "unknown parameter `{k}`; expected {}",
                allowed.join(", ")
            ))),
            None => Ok(()),
        }
    }
}

#[derive(Serialize)]
struct ExtremalReport {
    family: &'static str,
    #[serde(serialize_with = "ser_opt")]
    closed_form_rho: Option<f64>,
    #[serde(serialize_with = "ser_opt")]
    quotient_rho: Option<f64>,
    #[serde(flatten)]
    report: AnalysisReport,
}

fn ser_opt<S: serde::Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    x.map(round_sig15).serialize(s)
}

fn cmd_extremal(family: Family, params: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let p = Params(parse_params(params)?);
    let (name, graph, closed, quotient) = match family {
        Family::Kn => {
            p.only(&["n"])?;
            let n = p.get("n")?;
            ("kn", complete(n)?, Some(rho_complete(n)?), None)
        }
        Family::Kab => {
            p.only(&["a", "b"])?;
            let (a, b) = (p.get("a")?, p.get("b")?);
            let g = complete_bipartite(a, b)?.0;
            let closed = rho_complete_bipartite(a + b, a)?;
            let q = quotient_bipartite(a + b, a)?.spectral_radius()?;
            ("kab", g, Some(closed), Some(q))
        }
        Family::G1 => {
            p.only(&["n", "t"])?;
            let (n, t) = (p.get("n")?, p.get("t")?);
            let q = quotient_q1(n, t)?.spectral_radius()?;
            ("g1", g1_family(n, t)?, Some(rho_g1(n, t)?), Some(q))
        }
        Family::G2 => {
            p.only(&["n", "t"])?;
            let (n, t) = (p.get("n")?, p.get("t")?);
            let q = quotient_q2(n, t)?.spectral_radius()?;
            ("g2", g2_family(n, t)?, Some(rho_g2(n, t)?), Some(q))
        }
        Family::Split => {
            p.only(&["n", "s", "parts"])?;
            let (s, parts) = (p.get("s")?, p.list("parts")?);
            let total = s + parts.iter().sum::<usize>();
            let n = if p.0.contains_key("n") {
                p.get("n")?
            } else {
                total
            };
            let g = split_family(n, s, &parts)?;
            let q = quotient_split(s, &parts)?.spectral_radius()?;
            ("split", g, None, Some(q))
        }
        Family::Gstar => {
            p.only(&["s", "ns", "x", "y"])?;
            let (s, ns, x, y) = (p.get("s")?, p.get("ns")?, p.get("x")?, p.get("y")?);
            let g = gstar_family(s, ns, x, y)?.0;
            // The printed quotient only covers n_s ≤ s < x.
            let q = quotient_gstar(s, ns, x, y, GStarCase::of(s, ns, x))
                .ok()
                .map(|q| q.spectral_radius())
                .transpose()?;
            ("gstar", g, None, q)
        }
    };
    let report = analyze(&graph)?;
    let violated = !report.violations().is_empty();
    if json {
        let r = ExtremalReport {
            family: name,
            closed_form_rho: closed,
            quotient_rho: quotient,
            report,
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&r).expect("report serializes")
        )?;
    } else {
        writeln!(out, "family            {name}")?;
        if let Some(c) = closed {
            writeln!(out, "closed_form_rho   {}", round_sig15(c))?;
        }
        if let Some(q) = quotient {
            writeln!(out, "quotient_rho      {}", round_sig15(q))?;
        }
        write_report_text(&report, out)?;
    }
    Ok(if violated { EXIT_VIOLATION } else { EXIT_OK })
}

fn cmd_verify(tol: f64, json: bool, out: &mut dyn Write) -> Outcome {
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Failure::Usage(format!(
            "--tol must be a non-negative number, got {tol}"
        )));
    }
    let results = verify_claims(tol)?;
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&results).expect("results serialize")
        )?;
    } else {
        for r in &results {
            writeln!(
                out,
                "{:<4} {:<38} cases={:<6} worst_margin={:+.3e}  {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.cases,
                r.worst_margin,
                r.worst_case
            )?;
        }
    }
    Ok(if results.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}
