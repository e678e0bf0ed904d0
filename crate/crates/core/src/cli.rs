//! Command layer behind the `blbc` binary.
//!
//! Exit codes: 0 success (or a delivered verdict), 1 verification failure,
//! 2 malformed input or usage error, 3 I/O failure.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::construction::{generate, pending_from_trace, ConstructionState, OrdinaryPair, SeedTriple};
use crate::format::{FormatError, Metadata, PointFile, TraceFile};
use crate::pointset::PointSet;
use crate::svg::{render, EdgeLayer};
use crate::verifier::{
    verify_exclusion_bound, verify_no_k_collinear, verify_ordinary_oracle_trace, verify_triangle_pending,
    verify_unique_triple_at_insertion, verify_visible_pair_lemma, Check, VerificationReport, VerifyError,
};
use crate::visibility::check_blbc_instance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "blbc", version, about = "Exact visibility and collinearity tools for planar point sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a prefix of the blocking sequence.
    Generate(GenerateArgs),
    /// Check a point file (and optional trace) for the prefix properties.
    Verify(VerifyArgs),
    /// Report whether a point set has `l` collinear or `k` mutually visible points.
    Analyze(AnalyzeArgs),
    /// Draw a point file as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Number of points, at least 3.
    #[arg(long)]
    pub count: usize,
    /// Point file with exactly three seed points; defaults to (0,0), (1,0), (0,1).
    #[arg(long)]
    pub seed: Option<PathBuf>,
    /// Output point file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output trace file.
    #[arg(long)]
    pub trace_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub points: PathBuf,
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Comma-separated subset of: no4collinear, unique-triple,
    /// visible-pair-lemma, triangle-pending, exclusion-bound, ordinary-oracle.
    #[arg(long, value_delimiter = ',')]
    pub checks: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub points: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub l: usize,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub points: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = EdgeLayer::None)]
    pub edges: EdgeLayer,
}

/// A command failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: format!("{}: {err}", path.display()),
        }
    }

    fn input(path: &Path, err: impl std::fmt::Display) -> Self {
        Failure::usage(format!("{}: {err}", path.display()))
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::usage(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn read_points(path: &Path) -> Result<PointSet, Failure> {
    let file = PointFile::parse(&read(path)?).map_err(|e| Failure::input(path, e))?;
    file.point_set().map_err(|e| Failure::input(path, e))
}

fn read_trace(path: &Path) -> Result<TraceFile, Failure> {
    TraceFile::parse(&read(path)?).map_err(|e| Failure::input(path, e))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data serializes");
    text.push('\n');
    text
}

/// Runs a parsed command, writing results to `stdout` and diagnostics to
/// `stderr`, and returns the exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(&args, stdout),
        Command::Verify(args) => cmd_verify(&args, stdout),
        Command::Analyze(args) => cmd_analyze(&args, stdout),
        Command::Render(args) => cmd_render(&args),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    stdout.write_all(text.as_bytes()).map_err(|e| Failure {
        code: EXIT_IO,
        message: format!("standard output: {e}"),
    })
}

pub fn cmd_generate(args: &GenerateArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if args.count < 3 {
        return Err(Failure::usage(format!("--count must be at least 3, got {}", args.count)));
    }
    let (seed, seed_label) = match &args.seed {
        None => (SeedTriple::default(), "default (0,0) (1,0) (0,1)".to_string()),
        Some(path) => {
            let file = PointFile::parse(&read(path)?).map_err(|e| Failure::input(path, e))?;
            let seed = SeedTriple::try_from(file.points).map_err(|e| Failure::input(path, e))?;
            let label = seed
                .points()
                .iter()
                .map(|p| format!("({},{})", p.x, p.y))
                .collect::<Vec<_>>()
                .join(" ");
            (seed, label)
        }
    };
    let state: ConstructionState = generate(&seed, args.count).map_err(|e| Failure {
        code: EXIT_FAILED,
        message: e.to_string(),
    })?;
    let metadata = Metadata {
        seed: Some(seed_label),
        generator: Some(format!("blbc {}", env!("CARGO_PKG_VERSION"))),
        steps: Some(state.trace().len()),
    };
    let (points, trace) = state.into_parts();
    let json = PointFile::new(points.into_points()).with_metadata(metadata).to_json();
    match &args.out {
        Some(path) => write(path, &json)?,
        None => emit(stdout, &json)?,
    }
    if let Some(path) = &args.trace_out {
        write(path, &TraceFile::new(trace).to_json())?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerificationDocument {
    passed: bool,
    points: usize,
    trace_records: Option<usize>,
    checks: Vec<VerificationReport>,
}

fn selected_checks(args: &VerifyArgs, has_trace: bool) -> Result<Vec<Check>, Failure> {
    match &args.checks {
        None => Ok(Check::ALL
            .into_iter()
            .filter(|c| has_trace || !c.needs_trace())
            .collect()),
        Some(names) => {
            let mut checks = Vec::new();
            for name in names {
                let check = Check::from_name(name.trim()).ok_or_else(|| {
                    let known: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                    Failure::usage(format!("unknown check {name:?}; expected one of {}", known.join(", ")))
                })?;
                if check.needs_trace() && !has_trace {
                    return Err(Failure::usage(format!("check {} needs --trace", check.name())));
                }
                if !checks.contains(&check) {
                    checks.push(check);
                }
            }
            Ok(checks)
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let ps = read_points(&args.points)?;
    let trace = args.trace.as_deref().map(read_trace).transpose()?;
    let checks = selected_checks(args, trace.is_some())?;
    let records = trace.as_ref().map(|t| t.records.as_slice());
    let pending = match records {
        Some(r) => pending_from_trace(r),
        None => ordinary_pairs(&ps),
    };
    let mismatch = |e: VerifyError| match (&args.trace, e) {
        (Some(path), VerifyError::TraceMismatch(msg)) => Failure::input(path, msg),
        (_, e) => Failure::input(&args.points, e),
    };

    let mut reports = Vec::new();
    for check in checks {
        let report = match check {
            Check::NoFourCollinear => verify_no_k_collinear(&ps, 4).map_err(mismatch)?,
            Check::UniqueTriple => {
                verify_unique_triple_at_insertion(records.expect("trace present"), &ps).map_err(mismatch)?
            }
            Check::VisiblePairLemma => verify_visible_pair_lemma(&ps),
            Check::TrianglePending => {
                if let Some(r) = records {
                    // the replayed pending set only makes sense for matching points
                    if r.len() + 3 != ps.len() {
                        return Err(mismatch(VerifyError::TraceMismatch(format!(
                            "{} points need {} records, found {}",
                            ps.len(),
                            ps.len().saturating_sub(3),
                            r.len()
                        ))));
                    }
                }
                verify_triangle_pending(&ps, &pending)
            }
            Check::ExclusionBound => verify_exclusion_bound(records.expect("trace present")),
            Check::OrdinaryOracle => {
                verify_ordinary_oracle_trace(records.expect("trace present"), &ps).map_err(mismatch)?
            }
        };
        reports.push(report);
    }
    let passed = reports.iter().all(|r| r.passed);
    let doc = VerificationDocument {
        passed,
        points: ps.len(),
        trace_records: records.map(|r| r.len()),
        checks: reports,
    };
    emit(stdout, &to_json(&doc))?;
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

fn ordinary_pairs(ps: &PointSet) -> std::collections::BTreeSet<OrdinaryPair> {
    crate::incidence::LineIncidenceMap::build(ps)
        .lines()
        .iter()
        .filter(|e| e.len() == 2)
        .map(|e| OrdinaryPair::new(e.indices[0], e.indices[1]))
        .collect()
}

pub fn cmd_analyze(args: &AnalyzeArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if args.k < 2 || args.l < 2 {
        return Err(Failure::usage(format!(
            "--k and --l must be at least 2, got k={}, l={}",
            args.k, args.l
        )));
    }
    let ps = read_points(&args.points)?;
    let verdict = check_blbc_instance(&ps, args.k, args.l).map_err(|e| Failure::input(&args.points, e))?;
    emit(stdout, &to_json(&verdict))?;
    Ok(EXIT_OK)
}

pub fn cmd_render(args: &RenderArgs) -> Result<i32, Failure> {
    let ps = read_points(&args.points)?;
    if ps.is_empty() {
        return Err(Failure::input(&args.points, "no points to render"));
    }
    write(&args.out, &render(&ps, args.edges))?;
    Ok(EXIT_OK)
}
