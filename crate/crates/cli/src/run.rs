//! Argument parsing and command dispatch.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use spectral_moore_core::bounds::{b_upper, compare, extremal_family, m_bound, v_upper, Value, DEFAULT_TOL};
use spectral_moore_core::feasibility::{feasibility_report, nonexistence_report, DrgCandidate, Table7};
use spectral_moore_core::gfpoly::{gf_factor_seeded, GFPoly, DEFAULT_SEED};
use spectral_moore_core::graphs::{table1_entries, verify_table1, BipartiteGraph, KnownGraph};
use spectral_moore_core::lpcert::{build_certificate, lp_bound};
use spectral_moore_core::orthopoly::spectral_radius_edge;
use spectral_moore_core::poly::rat_to_f64;
use spectral_moore_core::spectra::{build_quotient, quotient_polynomial, second_eigenvalue_b_exact, QuotientKind};
use spectral_moore_core::theta::Theta;
use spectral_moore_core::{Error, ExactPolynomial};

use crate::parse::{load_table7, parse_rational, parse_theta, rational_text, theta_from_args};
use crate::report::{
    BoundReport, CertifyReport, CompareReport, CompareRow, FeasibleReport, GfFactorReport, GraphOut, NonexistReport,
    Num, QuotientReport, SweepRow, Table1Row,
};

/// Environment variable overriding the default tolerance.
pub const TOL_ENV: &str = "SPECTRAL_MOORE_TOL";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "spectral-moore", version, about = "Order bounds for regular graphs with a given second eigenvalue")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Numeric tolerance (default 1e-9, or $SPECTRAL_MOORE_TOL).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for randomized factorization.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Residue-case table to use instead of the embedded one.
    #[arg(long, global = true)]
    pub table7: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct ThetaArgs {
    /// Second eigenvalue: a rational, `sqrt(q)` or `-sqrt(q)`.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// Square of the second eigenvalue.
    #[arg(long)]
    pub exact_theta_sq: Option<String>,
    /// Use floating point instead of exact arithmetic.
    #[arg(long)]
    pub approx: bool,
}

impl ThetaArgs {
    fn theta(&self) -> Result<Theta, String> {
        let t = theta_from_args(self.theta.as_deref(), self.exact_theta_sq.as_deref())?;
        Ok(if self.approx { Theta::from_f64(t.value()) } else { t })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bipartite bound M for degree k and second eigenvalue theta.
    Bound {
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        theta: ThetaArgs,
    },
    /// General bound N for degree k and second eigenvalue theta.
    Vbound {
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        theta: ThetaArgs,
    },
    /// Compare M and N at one theta, or over a sweep of theta.
    Compare {
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        theta: ThetaArgs,
        /// Sample this many theta values across (0, 2 sqrt(k - 1)).
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Tridiagonal quotient matrix and its spectrum.
    Quotient {
        #[arg(long, value_enum, default_value = "b")]
        kind: KindArg,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        c: String,
    },
    /// Linear programming certificate for (k, t, c, theta).
    Certify {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        c: String,
        #[command(flatten)]
        theta: ThetaArgs,
        /// Comma-separated eigenvalues checked against the certificate.
        #[arg(long, allow_hyphen_values = true)]
        spectrum: Option<String>,
    },
    /// Feasibility of a bipartite distance-regular graph meeting M(k, d + 1, c).
    Feasible {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        c: u64,
    },
    /// Nonexistence evidence for diameter d.
    Nonexist {
        #[arg(long)]
        d: usize,
        /// Run the cubic-factor screen over GF(p).
        #[arg(long)]
        p: Option<u64>,
    },
    /// Factor an integer polynomial over GF(p).
    GfFactor {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Build named graphs and check them against the bound.
    VerifyKnown {
        /// Graph name such as `heawood` or `design:13:0,1,3,9`.
        #[arg(long)]
        name: Option<String>,
        /// Every constructed row of the extremal table.
        #[arg(long)]
        all: bool,
        /// Edge list file, one `u v` pair per line.
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// Nonexistence verdicts for a range of diameters.
    SweepNonexistence {
        #[arg(long, default_value_t = 15)]
        d_min: usize,
        #[arg(long)]
        d_max: usize,
    },
    /// Known graphs meeting the bipartite bound.
    Table1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    B,
    T,
}

/// Validated global options.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub format: Format,
    pub tol: f64,
    pub seed: u64,
    pub threads: Option<usize>,
    pub table7: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli, env_tol: Option<&str>) -> Result<Self, String> {
        let tol = match (cli.tol, env_tol) {
            (Some(t), _) => t,
            (None, Some(s)) => s.trim().parse::<f64>().map_err(|_| format!("{}: not a number: `{}`", TOL_ENV, s))?,
            (None, None) => DEFAULT_TOL,
        };
        if !(tol.is_finite() && tol > 0.0) {
            return Err(format!("tolerance must be positive, got {}", tol));
        }
        if cli.threads == Some(0) {
            return Err("--threads must be at least 1".into());
        }
        Ok(Self {
            format: if cli.json { Format::Json } else { cli.format },
            tol,
            seed: cli.seed.unwrap_or(DEFAULT_SEED),
            threads: cli.threads,
            table7: cli.table7.clone(),
        })
    }
}

/// How a command ended.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

/// Runs the program on `argv` (including the program name) and returns the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let env_tol = std::env::var(TOL_ENV).ok();
    let cfg = match RunConfig::from_cli(&cli, env_tol.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            return 1;
        }
    };
    match dispatch(&cli.command, &cfg, out) {
        Ok(true) => 0,
        Ok(false) => 2,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {}", msg);
            2
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            1
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{}", s)?;
    Ok(())
}

fn emit_csv<T: Serialize>(out: &mut dyn Write, rows: &[T]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    out.write_all(&bytes)?;
    Ok(())
}

/// Single reports: text or JSON.
fn emit_single<T: Serialize>(cfg: &RunConfig, out: &mut dyn Write, value: &T, text: String) -> Result<(), Failure> {
    match cfg.format {
        Format::Text => {
            out.write_all(text.as_bytes())?;
            Ok(())
        }
        Format::Json => emit_json(out, value),
        Format::Csv => Err(Failure::Usage("csv output is available for sweeps and tables only".into())),
    }
}

fn dispatch(cmd: &Command, cfg: &RunConfig, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Bound { k, theta } => {
            let r = BoundReport::new(&b_upper(*k, &theta.theta()?)?);
            emit_single(cfg, out, &r, r.text())?;
            Ok(true)
        }
        Command::Vbound { k, theta } => {
            let r = BoundReport::new(&v_upper(*k, &theta.theta()?)?);
            emit_single(cfg, out, &r, r.text())?;
            Ok(true)
        }
        Command::Compare { k, theta, samples } => cmd_compare(cfg, out, *k, theta, *samples),
        Command::Quotient { kind, k, t, c } => {
            let r = quotient_report(cfg, *kind, *k, *t, &parse_rational(c)?)?;
            emit_single(cfg, out, &r, r.text())?;
            Ok(true)
        }
        Command::Certify {
            k,
            t,
            c,
            theta,
            spectrum,
        } => cmd_certify(cfg, out, *k, *t, c, theta, spectrum.as_deref()),
        Command::Feasible { k, d, c } => {
            let table = load_table(cfg)?;
            let cand = DrgCandidate::new(*k, *d, *c)?;
            let r = FeasibleReport::new(&feasibility_report(&cand, &table)?);
            emit_single(cfg, out, &r, r.text())?;
            Ok(r.feasible)
        }
        Command::Nonexist { d, p } => {
            let table = load_table(cfg)?;
            let r = NonexistReport::new(&nonexistence_report(*d, &table, *p)?);
            emit_single(cfg, out, &r, r.text())?;
            Ok(true)
        }
        Command::GfFactor { p, poly } => {
            let (f, _) = ExactPolynomial::parse(poly)?;
            let g = GFPoly::from_exact(*p, &f)?;
            let w = gf_factor_seeded(&g, cfg.seed)?;
            let r = GfFactorReport::new(g.to_string(), &w);
            emit_single(cfg, out, &r, r.text())?;
            Ok(true)
        }
        Command::VerifyKnown { name, all, edges } => cmd_verify(cfg, out, name.as_deref(), *all, edges.as_ref()),
        Command::SweepNonexistence { d_min, d_max } => cmd_sweep(cfg, out, *d_min, *d_max),
        Command::Table1 => {
            let rows = table1_rows()?;
            match cfg.format {
                Format::Text => {
                    writeln!(
                        out,
                        "{:<16} {:>3} {:>3} {:>3} {:>9} {:>6} {:>11}  family",
                        "graph", "k", "d", "c", "theta", "M", "source"
                    )?;
                    for r in &rows {
                        out.write_all(r.text().as_bytes())?;
                    }
                }
                Format::Json => emit_json(out, &rows)?,
                Format::Csv => emit_csv(out, &rows)?,
            }
            Ok(true)
        }
    }
}

fn load_table(cfg: &RunConfig) -> Result<Table7, Failure> {
    Ok(load_table7(cfg.table7.as_deref())?)
}

fn cmd_compare(cfg: &RunConfig, out: &mut dyn Write, k: u64, theta: &ThetaArgs, samples: Option<usize>) -> Outcome {
    let Some(n) = samples else {
        let r = CompareReport::new(&compare(k, &theta.theta()?)?);
        emit_single(cfg, out, &r, r.text())?;
        return Ok(r.consistent);
    };
    if theta.theta.is_some() || theta.exact_theta_sq.is_some() {
        return Err(Failure::Usage("--samples replaces --theta".into()));
    }
    if n == 0 {
        return Err(Failure::Usage("--samples must be positive".into()));
    }
    let edge = spectral_radius_edge(k);
    let rows = (0..n)
        .map(|i| {
            let th = edge * (i as f64 + 0.5) / n as f64;
            compare(k, &Theta::from_f64(th)).map(|c| CompareRow::new(&CompareReport::new(&c)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    match cfg.format {
        Format::Json => emit_json(out, &rows)?,
        _ => emit_csv(out, &rows)?,
    }
    Ok(rows.iter().all(|r| r.consistent))
}

fn quotient_report(cfg: &RunConfig, kind: KindArg, k: u64, t: usize, c: &BigRational) -> Result<QuotientReport, Failure> {
    let qk = match kind {
        KindArg::B => QuotientKind::B,
        KindArg::T => QuotientKind::T,
    };
    let q = build_quotient(qk, k, t, c)?;
    let n = q.size();
    let matrix = (0..n)
        .map(|i| (0..n).map(|j| rational_text(&q.entry(i, j))).collect())
        .collect();
    let (factor, second) = match kind {
        KindArg::B => {
            let iv = second_eigenvalue_b_exact(k, t, c, cfg.tol)?;
            let f = quotient_polynomial(k, t, c)?;
            (
                Some(f.to_string()),
                Some((rational_text(&iv.lo), rational_text(&iv.hi))),
            )
        }
        KindArg::T => (None, None),
    };
    Ok(QuotientReport {
        kind: format!("{:?}", qk),
        k,
        t,
        c: Num::from_value(&Value::Exact(c.clone())),
        matrix,
        charpoly: q.charpoly().to_string(),
        factor,
        second_eigenvalue: second,
        spectrum: q.numeric_spectrum(),
    })
}

fn cmd_certify(
    cfg: &RunConfig,
    out: &mut dyn Write,
    k: u64,
    t: usize,
    c: &str,
    theta: &ThetaArgs,
    spectrum: Option<&str>,
) -> Outcome {
    let cq = parse_rational(c)?;
    let cv = if theta.approx { Value::Approx(rat_to_f64(&cq)) } else { Value::Exact(cq) };
    let th = theta.theta()?;
    let spec = match spectrum {
        Some(s) => s
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(parse_theta)
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    let check = |e: Error| match e {
        Error::HypothesisViolated(_) | Error::NotARoot { .. } => Failure::Check(e.to_string()),
        other => Failure::Usage(other.to_string()),
    };
    let cert = build_certificate(k, t, &cv, &th).map_err(check)?;
    let lp = lp_bound(k, &spec, &cert).map_err(check)?;
    let r = CertifyReport::new(&cert, &lp.bound);
    let mut text = r.text();
    if !spec.is_empty() {
        text.push_str(&format!("spectrum attains the bound: {}\n", lp.equality));
    }
    emit_single(cfg, out, &r, text)?;
    Ok(true)
}

/// Measured parameters of an arbitrary graph, with the bound at its own second eigenvalue.
fn measured(name: &str, g: &BipartiteGraph) -> GraphOut {
    let lambda2 = g.second_eigenvalue();
    let k = g.degree() as u64;
    let bound = b_upper(k, &Theta::from_f64(lambda2)).ok().map(|r| {
        let v = r.value.to_f64();
        let nearest = v.round();
        if (v - nearest).abs() <= 1e-6 * v.max(1.0) {
            nearest as u64
        } else {
            v.floor() as u64
        }
    });
    let girth = g.girth();
    let diameter = g.diameter();
    GraphOut {
        name: name.to_string(),
        k,
        n: g.n(),
        lambda2,
        girth,
        diameter,
        bound,
        order_matches: None,
        theta_matches: None,
        girth_ok: girth + 2 >= 2 * diameter,
        matches_bound: bound.map(|b| b == g.n() as u64),
    }
}

fn read_edges(path: &PathBuf) -> Result<BipartiteGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))?;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<usize> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| Failure::Usage(format!("{}:{}: expected two vertex indices", path.display(), i + 1)))?;
        if nums.len() != 2 {
            return Err(Failure::Usage(format!("{}:{}: expected two vertex indices", path.display(), i + 1)));
        }
        edges.push((nums[0], nums[1]));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Ok(BipartiteGraph::from_edges(n, &edges)?)
}

fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write, name: Option<&str>, all: bool, edges: Option<&PathBuf>) -> Outcome {
    let entries = table1_entries();
    let mut reports = Vec::new();
    if all {
        for e in &entries {
            reports.push(GraphOut::new(&verify_table1(e)?));
        }
    }
    if let Some(n) = name {
        let known = KnownGraph::parse(n)?;
        match entries.iter().find(|e| e.graph == known) {
            Some(e) => reports.push(GraphOut::new(&verify_table1(e)?)),
            None => reports.push(measured(n, &known.build()?)),
        }
    }
    if let Some(p) = edges {
        reports.push(measured(&p.display().to_string(), &read_edges(p)?));
    }
    if reports.is_empty() {
        return Err(Failure::Usage("give --name, --all or --edges".into()));
    }
    match cfg.format {
        Format::Text => {
            out.write_all(GraphOut::text_header().as_bytes())?;
            for r in &reports {
                out.write_all(r.text().as_bytes())?;
            }
            let ok = reports.iter().filter(|r| r.matches_bound == Some(true)).count();
            writeln!(out, "{} of {} graphs meet the bound", ok, reports.len())?;
        }
        Format::Json => emit_json(out, &reports)?,
        Format::Csv => emit_csv(out, &reports)?,
    }
    Ok(reports.iter().all(|r| r.matches_bound == Some(true)))
}

fn cmd_sweep(cfg: &RunConfig, out: &mut dyn Write, d_min: usize, d_max: usize) -> Outcome {
    if d_min < 3 || d_max < d_min {
        return Err(Failure::Usage(format!("need 3 <= d-min <= d-max, got {}..{}", d_min, d_max)));
    }
    let table = load_table(cfg)?;
    let work = || {
        (d_min..=d_max)
            .into_par_iter()
            .map(|d| nonexistence_report(d, &table, None).map(|r| SweepRow::new(&NonexistReport::new(&r))))
            .collect::<Result<Vec<_>, _>>()
    };
    let rows = match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    match cfg.format {
        Format::Json => emit_json(out, &rows)?,
        _ => emit_csv(out, &rows)?,
    }
    Ok(true)
}

/// Constructed rows followed by the rows known only through their parameters.
pub fn table1_rows() -> Result<Vec<Table1Row>, Error> {
    let mut rows = Vec::new();
    let mut push = |name: &str, k: u64, d: usize, c: u64, theta: String, constructed: bool| -> Result<(), Error> {
        let cv = Value::int(c as i64);
        let bound = m_bound(k, d + 1, &cv)?;
        rows.push(Table1Row {
            name: name.to_string(),
            k,
            d,
            c,
            theta,
            bound: match &bound {
                Value::Exact(q) => rational_text(q),
                Value::Approx(x) => x.to_string(),
            },
            constructed,
            family: extremal_family(k, d, &cv).map(String::from),
        });
        Ok(())
    };
    for e in table1_entries() {
        push(&e.name, e.k, e.d, e.c, e.theta().to_string(), true)?;
    }
    push("GH(2,2)", 3, 6, 1, Theta::from_square(BigRational::from_integer(6.into())).to_string(), false)?;
    push("pg(6,6,2)", 6, 4, 2, Theta::from_integer(3).to_string(), false)?;
    Ok(rows)
}
