// SPDX-License-Identifier: Apache-2.0

//! Command-line front end.
//!
//! Exit codes: `0` success, `1` argument or domain error, `2` internal
//! cross-check mismatch. Payloads go to standard output (or `--output`),
//! diagnostics to standard error.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dendrimer::DendrimerParams;
use crate::error::{Error, Result};
use crate::indices::{build_report, medium_domination_verified, wiener_closed};
use crate::oracle::{build_dendrimer_with, export_dot, export_edge_list, OracleLimits};
use crate::paths::{path_count_closed, path_count_table, PathLengthTable};
use crate::report::{
    medium_domination_to_csv, report_to_csv, report_to_text, table_to_text, to_csv, to_json,
    verification_to_text, ReportDocument,
};
use crate::verify::{run_sweep, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    /// Edge list, one `u v` pair per line (export only).
    Edges,
    /// Graphviz DOT (export only).
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaSelection {
    All,
    Value(u32),
}

fn decimal(s: &str) -> std::result::Result<u32, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected a decimal integer, got {s:?}"));
    }
    s.parse().map_err(|e| format!("{s:?}: {e}"))
}

fn decimal_u64(s: &str) -> std::result::Result<u64, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("expected a decimal integer, got {s:?}"));
    }
    s.parse().map_err(|e| format!("{s:?}: {e}"))
}

fn sigma_selection(s: &str) -> std::result::Result<SigmaSelection, String> {
    if s == "all" {
        Ok(SigmaSelection::All)
    } else {
        decimal(s).map(SigmaSelection::Value)
    }
}

#[derive(Debug, Parser)]
#[command(name = "dendro", version, about = "Exact path counts and distance indices of dendrimers T(n,k)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Shape {
    /// Radius (number of levels), at least 1.
    #[arg(long, value_parser = decimal)]
    n: u32,
    /// Degree of every non-leaf vertex, at least 2.
    #[arg(long, value_parser = decimal)]
    k: u32,
}

#[derive(Debug, Args)]
struct Sink {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the payload here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of paths of each length 1..=2n.
    Table {
        #[command(flatten)]
        shape: Shape,
        /// Only this length.
        #[arg(long, value_parser = decimal)]
        ell: Option<u32>,
        #[command(flatten)]
        sink: Sink,
    },
    /// Census, path table, Wiener index and average distance.
    Indices {
        #[command(flatten)]
        shape: Shape,
        /// Also report medium domination at this sigma (or "all").
        #[arg(long, value_parser = sigma_selection)]
        sigma: Option<SigmaSelection>,
        #[command(flatten)]
        sink: Sink,
    },
    /// Sigma-medium domination number.
    Meddom {
        #[command(flatten)]
        shape: Shape,
        /// Path-length threshold in 2..=2n, or "all".
        #[arg(long, value_parser = sigma_selection)]
        sigma: SigmaSelection,
        #[command(flatten)]
        sink: Sink,
    },
    /// Cross-check every formula against the others and the explicit graph.
    Verify {
        /// Sweep n over 1..=max-n.
        #[arg(long, value_parser = decimal)]
        max_n: u32,
        /// Sweep k over 2..=max-k.
        #[arg(long, value_parser = decimal)]
        max_k: u32,
        /// Seed for the random-tree batch.
        #[arg(long, value_parser = decimal_u64, default_value = "0")]
        seed: u64,
        /// Skip oracle checks for cells with more vertices than this.
        #[arg(long, value_parser = decimal_u64, default_value_t = SweepConfig::DEFAULT_ORACLE_MAX_VERTICES)]
        oracle_limit: u64,
        #[command(flatten)]
        sink: Sink,
    },
    /// Write T(n,k) as an edge list or DOT graph.
    Export {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        sink: Sink,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Table,
    Indices,
    Meddom,
    Verify,
    Export,
}

/// Parsed command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub command: CommandKind,
    pub n: u32,
    pub k: u32,
    pub ell: Option<u32>,
    pub sigma: Option<SigmaSelection>,
    pub max_n: u32,
    pub max_k: u32,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub oracle_limit: u64,
}

impl CliConfig {
    fn from_cli(cli: Cli) -> Self {
        let mut cfg = CliConfig {
            command: CommandKind::Table,
            n: 0,
            k: 0,
            ell: None,
            sigma: None,
            max_n: 0,
            max_k: 0,
            format: Format::Text,
            output: None,
            seed: 0,
            oracle_limit: SweepConfig::DEFAULT_ORACLE_MAX_VERTICES,
        };
        let mut apply = |shape: Option<Shape>, sink: Sink, default: Format| {
            if let Some(s) = shape {
                cfg.n = s.n;
                cfg.k = s.k;
            }
            cfg.format = sink.format.unwrap_or(default);
            cfg.output = sink.output;
        };
        match cli.command {
            Command::Table { shape, ell, sink } => {
                apply(Some(shape), sink, Format::Text);
                cfg.command = CommandKind::Table;
                cfg.ell = ell;
            }
            Command::Indices { shape, sigma, sink } => {
                apply(Some(shape), sink, Format::Text);
                cfg.command = CommandKind::Indices;
                cfg.sigma = sigma;
            }
            Command::Meddom { shape, sigma, sink } => {
                apply(Some(shape), sink, Format::Text);
                cfg.command = CommandKind::Meddom;
                cfg.sigma = Some(sigma);
            }
            Command::Verify {
                max_n,
                max_k,
                seed,
                oracle_limit,
                sink,
            } => {
                apply(None, sink, Format::Text);
                cfg.command = CommandKind::Verify;
                cfg.max_n = max_n;
                cfg.max_k = max_k;
                cfg.seed = seed;
                cfg.oracle_limit = oracle_limit;
            }
            Command::Export { shape, sink } => {
                apply(Some(shape), sink, Format::Edges);
                cfg.command = CommandKind::Export;
            }
        }
        cfg
    }

    pub fn params(&self) -> Result<DendrimerParams> {
        DendrimerParams::new(self.n, self.k)
    }

    fn sigmas(&self, p: &DendrimerParams) -> Vec<u32> {
        match self.sigma {
            None => Vec::new(),
            Some(SigmaSelection::All) => (2..=p.diameter()).collect(),
            Some(SigmaSelection::Value(s)) => vec![s],
        }
    }
}

/// Outcome of a command: payload to emit plus exit code.
struct Outcome {
    payload: String,
    code: i32,
}

impl Outcome {
    fn ok(payload: String) -> Self {
        Self { payload, code: EXIT_OK }
    }
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(m) => Failure::Mismatch(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

fn require_format(cfg: &CliConfig, allowed: &[Format]) -> std::result::Result<(), Failure> {
    if allowed.contains(&cfg.format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "format {:?} is not available here (use one of {:?})",
            cfg.format, allowed
        )))
    }
}

fn cmd_table(cfg: &CliConfig) -> CmdResult {
    require_format(cfg, &[Format::Text, Format::Json, Format::Csv])?;
    let p = cfg.params()?;
    let table = match cfg.ell {
        None => path_count_table(&p),
        Some(ell) => {
            let count = path_count_closed(&p, ell)?;
            PathLengthTable::from_counts(p, BTreeMap::from([(ell, count)]))
        }
    };
    Ok(Outcome::ok(match cfg.format {
        Format::Json => to_json(&table.into()),
        Format::Csv => to_csv(&table),
        _ => table_to_text(&table),
    }))
}

fn cmd_indices(cfg: &CliConfig) -> CmdResult {
    require_format(cfg, &[Format::Text, Format::Json, Format::Csv])?;
    let p = cfg.params()?;
    let report = build_report(&p, &cfg.sigmas(&p))?;
    let closed = if p.is_path() {
        None
    } else {
        let w = wiener_closed(&p)?;
        if w != report.wiener {
            return Err(Failure::Mismatch(format!(
                "Wiener index of {p}: closed form {w}, path-count sum {}",
                report.wiener
            )));
        }
        Some(w)
    };
    Ok(Outcome::ok(match cfg.format {
        Format::Json => to_json(&report.into()),
        Format::Csv => report_to_csv(&report),
        _ => report_to_text(&report, closed.as_ref()),
    }))
}

fn cmd_meddom(cfg: &CliConfig) -> CmdResult {
    require_format(cfg, &[Format::Text, Format::Json, Format::Csv])?;
    let p = cfg.params()?;
    let sigmas = cfg.sigmas(&p);
    if cfg.format == Format::Json {
        return Ok(Outcome::ok(to_json(&build_report(&p, &sigmas)?.into())));
    }
    let rows = sigmas
        .into_iter()
        .map(|s| medium_domination_verified(&p, s).map(|g| (s, g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::ok(match cfg.format {
        Format::Csv => medium_domination_to_csv(&rows),
        _ => {
            let mut out = format!("sigma-medium domination of {p}\n");
            for (s, g) in rows {
                out.push_str(&format!("sigma={s:<3} {g}\n"));
            }
            out
        }
    }))
}

fn cmd_verify(cfg: &CliConfig, limits: &OracleLimits) -> CmdResult {
    require_format(cfg, &[Format::Text, Format::Json])?;
    let mut sweep = SweepConfig::new(cfg.max_n, cfg.max_k);
    sweep.seed = cfg.seed;
    sweep.oracle_max_vertices = cfg.oracle_limit.min(limits.max_vertices);
    run_verify(cfg, &sweep)
}

/// Runs a prepared sweep; split out so tests can inject a faulty routine.
fn run_verify(cfg: &CliConfig, sweep: &SweepConfig) -> CmdResult {
    let summary = run_sweep(sweep)?;
    let code = if summary.passed() { EXIT_OK } else { EXIT_MISMATCH };
    let payload = match cfg.format {
        Format::Json => to_json(&ReportDocument::from(summary)),
        _ => verification_to_text(&summary),
    };
    Ok(Outcome { payload, code })
}

fn cmd_export(cfg: &CliConfig, limits: &OracleLimits) -> CmdResult {
    require_format(cfg, &[Format::Edges, Format::Dot])?;
    let p = cfg.params()?;
    let g = build_dendrimer_with(&p, limits)?;
    Ok(Outcome::ok(match cfg.format {
        Format::Dot => export_dot(&g),
        _ => export_edge_list(&g),
    }))
}

fn dispatch(cfg: &CliConfig, limits: &OracleLimits) -> CmdResult {
    match cfg.command {
        CommandKind::Table => cmd_table(cfg),
        CommandKind::Indices => cmd_indices(cfg),
        CommandKind::Meddom => cmd_meddom(cfg),
        CommandKind::Verify => cmd_verify(cfg, limits),
        CommandKind::Export => cmd_export(cfg, limits),
    }
}

/// Parses `args` (including the program name) into a [`CliConfig`].
pub fn parse_args<I, T>(args: I) -> std::result::Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args).map(CliConfig::from_cli)
}

/// Completes a command that has already produced an outcome.
fn finish(
    cfg: &CliConfig,
    result: CmdResult,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match result {
        Ok(outcome) => {
            let written = match &cfg.output {
                Some(path) => fs::write(path, outcome.payload.as_bytes())
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(outcome.payload.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            if outcome.code == EXIT_MISMATCH {
                let _ = writeln!(stderr, "error: verification found a mismatch");
            }
            outcome.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(stderr, "error: internal inconsistency: {msg}");
            EXIT_MISMATCH
        }
    }
}

/// Runs a parsed configuration.
pub fn execute(
    cfg: &CliConfig,
    limits: &OracleLimits,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    finish(cfg, dispatch(cfg, limits), stdout, stderr)
}

/// Runs `verify` with a caller-supplied sweep (e.g. a faulty path-count
/// routine) and the usual output handling.
pub fn execute_verify_with(
    cfg: &CliConfig,
    sweep: &SweepConfig,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    finish(cfg, run_verify(cfg, sweep), stdout, stderr)
}

/// Full entry point: parse, run, report. Returns the process exit code.
pub fn run<I, T>(args: I, limits: &OracleLimits, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(args) {
        Ok(cfg) => execute(&cfg, limits, stdout, stderr),
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["dendro"];
        argv.extend_from_slice(args);
        let code = run(argv, &OracleLimits::default(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parses_flags() {
        let cfg = parse_args(["dendro", "meddom", "--n", "2", "--k", "3", "--sigma", "all", "--format", "csv"]).unwrap();
        assert_eq!(cfg.command, CommandKind::Meddom);
        assert_eq!((cfg.n, cfg.k), (2, 3));
        assert_eq!(cfg.sigma, Some(SigmaSelection::All));
        assert_eq!(cfg.format, Format::Csv);
        let cfg = parse_args(["dendro", "export", "--n", "1", "--k", "3"]).unwrap();
        assert_eq!(cfg.format, Format::Edges);
    }

    #[test]
    fn rejects_non_decimal_numbers() {
        assert!(parse_args(["dendro", "table", "--n", "1e3", "--k", "3"]).is_err());
        assert!(parse_args(["dendro", "table", "--n", "+2", "--k", "3"]).is_err());
        assert!(parse_args(["dendro", "table", "--n", "-2", "--k", "3"]).is_err());
        let (code, _, err) = run_str(&["table", "--n", "2.0", "--k", "3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("decimal"), "{err}");
    }

    #[test]
    fn table_commands() {
        let (code, out, _) = run_str(&["table", "--n", "2", "--k", "3", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "length,count\n1,9\n2,12\n3,12\n4,12\n");

        let (code, out, _) = run_str(&["table", "--n", "3", "--k", "2", "--format", "text"]);
        assert_eq!(code, 0);
        let counts: Vec<&str> = out.lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
        assert_eq!(counts, ["6", "5", "4", "3", "2", "1"]);

        let (code, out, _) = run_str(&["table", "--n", "2", "--k", "3", "--ell", "3", "--format", "csv"]);
        assert_eq!((code, out.as_str()), (0, "length,count\n3,12\n"));

        let (code, out, err) = run_str(&["table", "--n", "0", "--k", "3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("n >= 1"), "{err}");

        assert_eq!(run_str(&["table", "--n", "2", "--k", "3", "--ell", "0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["table", "--n", "2", "--k", "3", "--format", "dot"]).0, EXIT_USAGE);
    }

    #[test]
    fn indices_commands() {
        let (code, out, _) = run_str(&["indices", "--n", "1", "--k", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("wiener (sum)      9\n"), "{out}");
        assert!(out.contains("wiener (closed)   9\n"), "{out}");
        assert!(out.contains("average distance  3/2\n"), "{out}");

        let (code, out, _) = run_str(&["indices", "--n", "2", "--k", "3", "--format", "json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"wiener\": \"117\""));
        assert!(out.contains("\"num\": \"13\""));

        let (code, _, _) = run_str(&["indices", "--n", "10", "--k", "10"]);
        assert_eq!(code, 0);

        let (code, out, _) = run_str(&["indices", "--n", "3", "--k", "2"]);
        assert_eq!(code, 0);
        assert!(!out.contains("closed"));
        assert!(out.contains("wiener (sum)      56\n"));
    }

    #[test]
    fn meddom_commands() {
        let (code, out, _) = run_str(&["meddom", "--n", "2", "--k", "3", "--sigma", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("sigma=2   7/15"), "{out}");
        let (code, out, _) = run_str(&["meddom", "--n", "2", "--k", "3", "--sigma", "4", "--format", "csv"]);
        assert_eq!((code, out.as_str()), (0, "sigma,value\n4,1/1\n"));
        let (code, out, _) = run_str(&["meddom", "--n", "2", "--k", "3", "--sigma", "all", "--format", "csv"]);
        assert_eq!((code, out.as_str()), (0, "sigma,value\n2,7/15\n3,11/15\n4,1/1\n"));
        let (code, _, err) = run_str(&["meddom", "--n", "2", "--k", "3", "--sigma", "9"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("sigma = 9"), "{err}");
    }

    #[test]
    fn export_commands() {
        let (code, out, _) = run_str(&["export", "--n", "1", "--k", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 3);
        let (code, out, _) = run_str(&["export", "--n", "2", "--k", "3", "--format", "dot"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("--").count(), 9);
        let (code, out, err) = run_str(&["export", "--n", "20", "--k", "10"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("oracle cap"), "{err}");
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
    }
}
