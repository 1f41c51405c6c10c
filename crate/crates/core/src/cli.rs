//! Command-line front end: `build`, `verify`, `gen` and `bench`.
//!
//! Exit codes: 0 success, 1 stretch violation, 2 input error, 3 internal
//! invariant violation (including a dominating-set size bound being exceeded).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::generate::generate_gnm;
use crate::graph::{parse_edge_list, write_edge_set, Graph, GraphError};
use crate::oracle::{edge_budget_report, verify_stretch, OracleError, DEFAULT_VERIFICATION_CAP};
use crate::params::{ParamError, SpannerParams};
use crate::reduction::build_4_spanner_timed;
use crate::report::{write_bench_csv, BenchRow, BuildReport, REPORT_SCHEMA_VERSION};
use crate::spanner5::{build_5_spanner_timed, PhaseTimings, SpannerError, SpannerResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_STRETCH_VIOLATION: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Verification runs by default up to this many vertices.
pub const AUTO_VERIFY_LIMIT: usize = 1024;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("stretch violation: {0}")]
    Violation(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT_ERROR,
            CliError::Violation(_) => EXIT_STRETCH_VIOLATION,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<SpannerError> for CliError {
    fn from(e: SpannerError) -> Self {
        match e {
            SpannerError::Params(p) => CliError::Input(p.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

#[derive(Debug, Parser)]
#[command(name = "spanner", version, about = "Deterministic additive graph spanners")]
pub struct RunConfig {
    /// Worker threads; outputs do not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a spanner of an edge-list graph.
    Build(BuildArgs),
    /// Check the additive stretch of a spanner against its graph.
    Verify(VerifyArgs),
    /// Generate a seeded G(n, m) graph.
    Gen(GenArgs),
    /// Run a size ladder and write a CSV of edge counts and phase times.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub elim_threshold: Option<f64>,
    #[arg(long)]
    pub heavy_threshold: Option<f64>,
    #[arg(long)]
    pub f_threshold: Option<f64>,
    #[arg(long, default_value_t = 3.0)]
    pub subtree_factor: f64,
    #[arg(long, default_value_t = 5.0)]
    pub shortpath_factor: f64,
    /// Disable the `m <= n^(7/5)` keep-everything shortcut.
    #[arg(long)]
    pub no_shortcut: bool,
}

impl ThresholdArgs {
    pub fn params(&self) -> SpannerParams {
        SpannerParams {
            elim_threshold: self.elim_threshold,
            heavy_threshold: self.heavy_threshold,
            f_threshold: self.f_threshold,
            subtree_factor: self.subtree_factor,
            shortpath_factor: self.shortpath_factor,
            dense_shortcut: !self.no_shortcut,
        }
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Spanner edge list; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// JSON report path.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Additive stretch to build for.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(4..=5))]
    pub mode: u32,
    /// Force verification (default: on for n <= 1024).
    #[arg(long, conflicts_with = "no_verify")]
    pub verify: bool,
    #[arg(long)]
    pub no_verify: bool,
    #[arg(long, default_value_t = DEFAULT_VERIFICATION_CAP)]
    pub verify_cap: usize,
    /// Accepted for symmetry with `gen`; the construction is deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub thresholds: ThresholdArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub spanner: PathBuf,
    /// Allowed additive stretch.
    #[arg(long, default_value_t = 4)]
    pub mode: u32,
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_VERIFICATION_CAP)]
    pub verify_cap: usize,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub sizes: Vec<usize>,
    /// Edge count per row is `min(n(n-1)/2, floor(n^density))`.
    #[arg(long, default_value_t = 1.8)]
    pub density: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(4..=5))]
    pub mode: u32,
    /// Verify every row (skipped by default).
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = DEFAULT_VERIFICATION_CAP)]
    pub verify_cap: usize,
    /// CSV path; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub thresholds: ThresholdArgs,
}

fn create_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(p) => Ok(Box::new(File::create(p).map_err(|e| io_err(p, e))?)),
        None => Ok(Box::new(io::stdout())),
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let file = File::open(path).map_err(|e| io_err(path, e))?;
    parse_edge_list(BufReader::new(file)).map_err(|e| io_err(path, e))
}

/// Runs the construction for `mode` (4 or 5).
pub fn build_for_mode(
    g: &Graph,
    mode: u32,
    params: &SpannerParams,
) -> Result<(SpannerResult, PhaseTimings), SpannerError> {
    match mode {
        4 => build_4_spanner_timed(g, params),
        5 => build_5_spanner_timed(g, params),
        other => Err(ParamError::UnsupportedMode(other).into()),
    }
}

pub fn cmd_build(args: &BuildArgs) -> Result<(), CliError> {
    let g = read_graph(&args.input)?;
    let mut out = create_output(&args.output)?;
    let mut report_out = match &args.report {
        Some(p) => Some(File::create(p).map_err(|e| io_err(p, e))?),
        None => None,
    };

    let (result, _) = build_for_mode(&g, args.mode, &args.thresholds.params())?;
    if !result.spanner_edges.is_subset_of(&g) || result.spanner_edges.len() > g.edge_count() {
        return Err(CliError::Internal("spanner is not a subgraph of the input".into()));
    }

    let verify = args.verify || (!args.no_verify && g.vertex_count() <= AUTO_VERIFY_LIMIT);
    let verification = if verify {
        Some(verify_stretch(&g, &result.spanner_edges, args.mode, args.verify_cap)?)
    } else {
        None
    };

    write_edge_set(g.vertex_count(), &result.spanner_edges, &mut out)
        .map_err(|e| CliError::Input(format!("writing spanner: {e}")))?;
    let passed = verification.as_ref().map_or(true, |v| v.passed);
    let worst = verification.as_ref().map(|v| v.report.max_excess);
    if let Some(file) = report_out.as_mut() {
        let report = BuildReport {
            schema_version: REPORT_SCHEMA_VERSION,
            result: &result,
            budget: edge_budget_report(&g, &result),
            verification,
        };
        file.write_all(report.to_json().as_bytes())
            .map_err(|e| CliError::Input(format!("writing report: {e}")))?;
    }
    eprintln!(
        "n={} m={} spanner_edges={} s1={} s2={} rounds={} shortcut={}",
        result.vertex_count,
        result.edge_count,
        result.spanner_edge_count,
        result.s1_size,
        result.s2_size,
        result.elimination_rounds,
        result.shortcut_fired
    );
    if passed {
        Ok(())
    } else {
        Err(CliError::Violation(format!(
            "max excess {worst:?} exceeds {}",
            args.mode
        )))
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let g = read_graph(&args.input)?;
    let h = read_graph(&args.spanner)?;
    if h.vertex_count() > g.vertex_count() {
        return Err(CliError::Input(format!(
            "spanner has {} vertices, graph only {}",
            h.vertex_count(),
            g.vertex_count()
        )));
    }
    let verdict = verify_stretch(&g, &h.edge_set(), args.mode, args.verify_cap)?;
    let json = serde_json::to_string_pretty(&verdict).expect("verdict serializes") + "\n";
    match &args.report {
        Some(p) => std::fs::write(p, json).map_err(|e| io_err(p, e))?,
        None => print!("{json}"),
    }
    if verdict.passed {
        Ok(())
    } else {
        Err(CliError::Violation(format!(
            "max excess {:?} at {:?}",
            verdict.report.max_excess, verdict.report.worst_pair
        )))
    }
}

pub fn cmd_gen(args: &GenArgs) -> Result<(), CliError> {
    let mut out = create_output(&args.output)?;
    let g = generate_gnm(args.n, args.m, args.seed).map_err(|e| CliError::Input(e.to_string()))?;
    g.write_edge_list(&mut out)
        .map_err(|e| CliError::Input(format!("writing graph: {e}")))
}

/// Edge count for a ladder row: `min(n(n-1)/2, floor(n^density))`.
pub fn ladder_edge_count(n: usize, density: f64) -> u64 {
    let max = (n as u64) * (n as u64).saturating_sub(1) / 2;
    ((n as f64).powf(density).floor() as u64).min(max)
}

/// Generates, builds and optionally verifies one ladder row.
pub fn bench_row(
    n: usize,
    density: f64,
    seed: u64,
    mode: u32,
    params: &SpannerParams,
    verify_cap: Option<usize>,
) -> Result<BenchRow, CliError> {
    let start = Instant::now();
    let g = generate_gnm(n, ladder_edge_count(n, density), seed)
        .map_err(|e: GraphError| CliError::Input(e.to_string()))?;
    let generate_time = start.elapsed();
    let (result, timings) = build_for_mode(&g, mode, params)?;
    if result.spanner_edges.len() > g.edge_count() {
        return Err(CliError::Internal("spanner has more edges than the graph".into()));
    }
    let verified = match verify_cap {
        Some(cap) => Some(verify_stretch(&g, &result.spanner_edges, mode, cap)?.passed),
        None => None,
    };
    let budget = edge_budget_report(&g, &result);
    Ok(BenchRow {
        n,
        m: g.edge_count(),
        mode,
        spanner_edges: budget.spanner_edges,
        ratio_to_bound: budget.ratio_to_bound,
        ratio_to_m: budget.ratio_to_m,
        s1_size: result.s1_size,
        s2_size: result.s2_size,
        elimination_rounds: result.elimination_rounds,
        shortcut_fired: result.shortcut_fired,
        verified,
        generate_time,
        timings,
    })
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    let out = create_output(&args.output)?;
    let params = args.thresholds.params();
    let cap = args.verify.then_some(args.verify_cap);
    let mut rows = Vec::with_capacity(args.sizes.len());
    for &n in &args.sizes {
        rows.push(bench_row(n, args.density, args.seed, args.mode, &params, cap)?);
    }
    write_bench_csv(&rows, out).map_err(|e| CliError::Input(format!("writing CSV: {e}")))?;
    match rows.iter().find(|r| r.verified == Some(false)) {
        Some(r) => Err(CliError::Violation(format!("row n = {} failed verification", r.n))),
        None => Ok(()),
    }
}

fn dispatch(cfg: &RunConfig) -> Result<(), CliError> {
    match &cfg.command {
        Command::Build(a) => cmd_build(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cfg.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&cfg)),
            Err(e) => Err(CliError::Input(format!("thread pool: {e}"))),
        },
        None => dispatch(&cfg),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_edge_counts() {
        assert_eq!(ladder_edge_count(128, 1.8), 6208);
        assert_eq!(ladder_edge_count(32, 1.8), 496);
        assert_eq!(ladder_edge_count(1, 1.8), 0);
    }

    #[test]
    fn mode_is_range_checked() {
        assert!(RunConfig::try_parse_from(["spanner", "build", "--input", "x", "--mode", "3"]).is_err());
        let cfg = RunConfig::try_parse_from(["spanner", "--threads", "2", "build", "--input", "x", "--mode", "5"]).unwrap();
        assert_eq!(cfg.threads, Some(2));
        assert!(matches!(cfg.command, Command::Build(BuildArgs { mode: 5, .. })));
    }

    #[test]
    fn verify_flags_conflict() {
        assert!(RunConfig::try_parse_from(["spanner", "build", "--input", "x", "--verify", "--no-verify"]).is_err());
    }

    #[test]
    fn empty_size_list_parses() {
        for args in [&["spanner", "bench", "--sizes"][..], &["spanner", "bench"][..]] {
            let cfg = RunConfig::try_parse_from(args).unwrap();
            let Command::Bench(b) = cfg.command else { panic!() };
            assert!(b.sizes.is_empty());
        }
        let cfg = RunConfig::try_parse_from(["spanner", "bench", "--sizes", "128,256"]).unwrap();
        let Command::Bench(b) = cfg.command else { panic!() };
        assert_eq!(b.sizes, vec![128, 256]);
    }
}
