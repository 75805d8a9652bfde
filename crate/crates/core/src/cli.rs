//! Command-line front end: `exact`, `region`, `approx` and `validate`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::corpus::NamedGraph;
use crate::error::{Error, Result};
use crate::exact::ExactEngine;
use crate::graph::{read_graph, Graph};
use crate::interpolator::{approximate_phi, ApproxConfig, DEFAULT_M_CAP};
use crate::region::{optimal_a, z_max, Point, RegionParams};
use crate::validate::{self, Suite, ValidateOptions, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(
    name = "sesq",
    version,
    about = "Sesquivalent graph polynomial: exact values, zero-free regions, approximation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact polynomial and, given a point, its value.
    Exact {
        #[command(flatten)]
        run: RunConfig,
        /// Also emit Φ(λ, -1, -2), the characteristic polynomial.
        #[arg(long)]
        harary_sachs: bool,
        /// Also emit Φ(x, -1, 0), the matching polynomial.
        #[arg(long)]
        matching: bool,
    },
    /// Zero-free region certificate and admissible |z| budgets.
    Region {
        #[command(flatten)]
        run: RunConfig,
    },
    /// Deterministic approximation with a certified error on log Φ.
    Approx {
        #[command(flatten)]
        run: RunConfig,
    },
    /// Run the validation suites over the built-in corpus.
    Validate {
        #[command(flatten)]
        run: RunConfig,
        /// Restrict to one suite (specialization, region, optimality, approx;
        /// an `-only` suffix is accepted).
        #[arg(long)]
        suite: Vec<Suite>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Graph file: edge list (`u v` lines, optional `n <N>` header) or JSON.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// x as `re,im` (or a bare real).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub x: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub y: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: Option<Complex64>,
    /// Auxiliary parameter a > 0; defaults to the optimal value.
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long, default_value_t = 0.01)]
    pub eps: f64,
    /// Use the graph's girth to sharpen the cycle term.
    #[arg(long)]
    pub girth_refine: bool,
    /// Analytic degree bound (at least the graph's maximum degree).
    #[arg(long)]
    pub delta: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_M_CAP)]
    pub m_cap: usize,
    #[arg(long, default_value_t = crate::exact::DEFAULT_ENUM_LIMIT)]
    pub enum_cap: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

/// Parses `re,im` or a bare real number.
pub fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("invalid number `{t}` in `{s}`"))
    };
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
        None => Ok(Complex64::new(parse(s)?, 0.0)),
    }
}

/// A finished command: the JSON document and the process exit code.
#[derive(Debug)]
pub struct CmdOutput {
    pub report: Value,
    pub exit_code: i32,
    /// Human-readable lines for stderr.
    pub log: Vec<String>,
}

impl CmdOutput {
    fn ok(report: Value) -> CmdOutput {
        CmdOutput {
            report,
            exit_code: 0,
            log: Vec::new(),
        }
    }
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn load_graph(run: &RunConfig) -> Result<Graph> {
    match &run.graph {
        Some(path) => read_graph(path),
        None => Err(Error::Parse {
            line: 0,
            message: "--graph PATH is required".into(),
        }),
    }
}

fn point(run: &RunConfig) -> Result<Point> {
    let x = run.x.ok_or_else(|| Error::Parse {
        line: 0,
        message: "--x re,im is required".into(),
    })?;
    let zero = Complex64::new(0.0, 0.0);
    Ok(Point::new(x, run.y.unwrap_or(zero), run.z.unwrap_or(zero)))
}

pub fn cmd_exact(run: &RunConfig, harary_sachs: bool, matching: bool) -> Result<CmdOutput> {
    let g = load_graph(run)?;
    let engine = ExactEngine::new(run.enum_cap);
    let poly = engine.phi_polynomial(&g)?;
    let mut report = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "polynomial": poly.to_json_value(),
        "subgraph_count": poly.subgraph_count().to_string(),
    });
    if run.x.is_some() {
        let p = point(run)?;
        report["point"] = json!({"x": complex_json(p.x), "y": complex_json(p.y), "z": complex_json(p.z)});
        report["value"] = complex_json(poly.eval(p.x, p.y, p.z));
    }
    let descending =
        |u: crate::exact::UniPoly| -> Value { u.descending().iter().map(|c| Value::String(c.to_string())).collect() };
    if harary_sachs {
        report["harary_sachs"] = descending(poly.poly().specialize_yz(-1, -2));
    }
    if matching {
        report["matching"] = descending(poly.poly().specialize_yz(-1, 0));
    }
    Ok(CmdOutput::ok(report))
}

pub fn cmd_region(run: &RunConfig) -> Result<CmdOutput> {
    let g = load_graph(run)?;
    let delta = run.delta.unwrap_or_else(|| g.max_degree());
    if delta < 2 {
        return Err(Error::UnsupportedDegree { delta });
    }
    if run.delta.is_some() && delta < g.max_degree() {
        return Err(Error::DeltaBelowMaxDegree {
            delta,
            max_degree: g.max_degree(),
        });
    }
    let p = point(run)?;
    let (abs_x, abs_y) = (p.x.norm(), p.y.norm());
    let opt = optimal_a(delta, abs_x, abs_y)?;
    let a = match run.a {
        Some(a) => a,
        None => crate::region::resolve_a(delta, abs_x, abs_y)?,
    };
    let cert = RegionParams::new(delta, a, None)?.certify(&p);
    let budget_at_a = z_max(delta, abs_x, abs_y, Some(a)).ok();
    let budget_opt = z_max(delta, abs_x, abs_y, None).ok();
    let mut report = json!({
        "delta": delta,
        "certificate": cert,
        "optimal_a": opt,
        "z_max_at_a": budget_at_a,
        "z_max_optimal": budget_opt,
    });
    let mut inside = cert.inside;
    if run.girth_refine {
        let girth = g.girth();
        let refined = match girth {
            Some(gg) => RegionParams::new(delta, a, Some(gg))?.certify(&p),
            // no cycles: the cycle term vanishes
            None => RegionParams::new(delta, a, None)?.certify(&Point::new(p.x, p.y, Complex64::new(0.0, 0.0))),
        };
        report["girth"] = json!(girth);
        report["girth_refined"] = json!(refined);
        inside = refined.inside;
    }
    let mut out = CmdOutput::ok(report);
    if !inside {
        out.exit_code = 2;
        if let Some(reason) = cert.failed {
            out.log.push(format!("point outside the certified region ({reason})"));
        }
    }
    Ok(out)
}

pub fn cmd_approx(run: &RunConfig) -> Result<CmdOutput> {
    let g = load_graph(run)?;
    let p = point(run)?;
    let config = ApproxConfig {
        delta: run.delta,
        m_cap: run.m_cap,
    };
    let approx = approximate_phi(&g, &p, run.a, run.eps, &config)?;
    let plan = approx.plan;
    let mut report = json!({
        "phi_hat": complex_json(approx.phi_hat),
        "epsilon": plan.epsilon,
        "rho": plan.rho,
        "m": plan.m,
        "a": plan.a,
        "b": approx.series.b.iter().map(|&b| complex_json(b)).collect::<Vec<_>>(),
        "plan": plan,
        "oracle_phi": Value::Null,
        "eta_abs": Value::Null,
    });
    let engine = ExactEngine::new(run.enum_cap);
    if engine.check(&g).is_ok() {
        let exact = engine.phi_polynomial(&g)?.eval(p.x, p.y, p.z);
        let eta = (approx.phi_hat / exact).ln().norm();
        report["oracle_phi"] = complex_json(exact);
        report["eta_abs"] = json!(eta);
        if eta.is_nan() || eta > plan.epsilon {
            let mut out = CmdOutput::ok(report);
            out.exit_code = 1;
            out.log.push(format!("|η| = {eta} exceeds ε = {}", plan.epsilon));
            return Ok(out);
        }
    }
    Ok(CmdOutput::ok(report))
}

pub fn cmd_validate(run: &RunConfig, suites: &[Suite]) -> Result<CmdOutput> {
    let mut opts = ValidateOptions {
        seed: run.seed,
        enum_limit: run.enum_cap,
        ..Default::default()
    };
    if !suites.is_empty() {
        opts.suites = suites.to_vec();
    }
    if let Some(path) = &run.graph {
        opts.extra
            .push(NamedGraph::new(path.display().to_string(), read_graph(path)?));
    }
    let reports = validate::run(&opts);
    let mut log = Vec::new();
    let mut failed = false;
    for r in &reports {
        log.push(format!(
            "{:<15} {} checks={} failures={}",
            r.suite,
            if r.passed() { "PASS" } else { "FAIL" },
            r.checks,
            r.failures.len()
        ));
        for f in r.failures.iter().take(5) {
            log.push(format!("    {f}"));
        }
        failed |= !r.passed();
    }
    Ok(CmdOutput {
        report: json!({ "seed": run.seed, "suites": reports }),
        exit_code: i32::from(failed),
        log,
    })
}

pub fn execute(cli: &Cli) -> (Option<PathBuf>, Result<CmdOutput>) {
    match &cli.command {
        Command::Exact {
            run,
            harary_sachs,
            matching,
        } => (run.json.clone(), cmd_exact(run, *harary_sachs, *matching)),
        Command::Region { run } => (run.json.clone(), cmd_region(run)),
        Command::Approx { run } => (run.json.clone(), cmd_approx(run)),
        Command::Validate { run, suite } => (run.json.clone(), cmd_validate(run, suite)),
    }
}

/// JSON body reported for a failed command.
pub fn error_report(err: &Error) -> Value {
    let reason = match err {
        Error::OutsideRegion { reason } => Some(reason.to_string()),
        Error::Input { source, .. } => match source.as_ref() {
            Error::OutsideRegion { reason } => Some(reason.to_string()),
            _ => None,
        },
        Error::DivergentSeries { .. } => Some("x-condition".to_string()),
        _ => None,
    };
    json!({ "error": err.to_string(), "reason": reason, "exit_code": err.exit_code() })
}
