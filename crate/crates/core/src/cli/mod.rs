//! Command-line front end: `run`, `validate` and `list-builtins`.

mod format;
pub mod manifest;
mod run;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::tqft::TqftError;
use crate::topology::builtin_names;

pub use format::{render, Format};
pub use manifest::{Manifest, Resolved, SCHEMA};
pub use run::{run_manifest, ErrorRecord, JobRecord, Report};

pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCHEMA: i32 = 3;
pub const EXIT_REFERENCE: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;
pub const EXIT_COMPUTE: i32 = 6;
pub const EXIT_CHECK_FAILED: i32 = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("unresolved reference: {0}")]
    Reference(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("computation failed: {0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Schema(_) => EXIT_SCHEMA,
            CliError::Reference(_) => EXIT_REFERENCE,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Compute(_) => EXIT_COMPUTE,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Schema(_) => "schema",
            CliError::Reference(_) => "reference",
            CliError::Budget(_) => "budget",
            CliError::Compute(_) => "compute",
        }
    }
}

impl From<TqftError> for CliError {
    fn from(e: TqftError) -> Self {
        if e.is_budget() {
            CliError::Budget(e.to_string())
        } else {
            CliError::Compute(e.to_string())
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dwtqft", version, about = "Exact partition functions of finite gauge theories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every job of a manifest.
    Run {
        #[arg(long)]
        manifest: PathBuf,
        /// Worker threads; output does not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Seed for randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a manifest without computing anything.
    Validate {
        #[arg(long)]
        manifest: PathBuf,
    },
    /// List builtin manifolds, models and bordisms.
    ListBuiltins,
}

pub fn load_manifest(path: &std::path::Path) -> Result<Manifest, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse_manifest(&text)
}

pub fn parse_manifest(text: &str) -> Result<Manifest, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
}

fn list_builtins(out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "manifolds (builtin):")?;
    for n in builtin_names() {
        writeln!(out, "  {n}")?;
    }
    writeln!(out, "models (model):")?;
    for n in manifest::NAMED_MODELS {
        writeln!(out, "  {n}")?;
    }
    writeln!(out, "bordisms (builtin):")?;
    for n in manifest::NAMED_BORDISMS {
        writeln!(out, "  {n}")?;
    }
    Ok(())
}

/// Runs a parsed command, writing reports to `out` and diagnostics to `err`.
pub fn execute(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let result = match cli.command {
        Command::ListBuiltins => list_builtins(out).map(|_| 0).map_err(|e| CliError::Compute(e.to_string())),
        Command::Validate { manifest } => load_manifest(&manifest).and_then(|m| {
            let r = Resolved::new(&m)?;
            let summary = serde_json::json!({"schema": SCHEMA, "valid": true, "definitions": r.definition_counts()});
            writeln!(out, "{}", serde_json::to_string_pretty(&summary).expect("json")).map_err(|e| CliError::Compute(e.to_string()))?;
            Ok(0)
        }),
        Command::Run { manifest, jobs, format, seed } => load_manifest(&manifest).and_then(|m| {
            let r = Resolved::new(&m)?;
            let report = run_manifest(&r, jobs, seed)?;
            let fmt = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
                FormatArg::Table => Format::Table,
            };
            out.write_all(render(&report, fmt).as_bytes()).map_err(|e| CliError::Compute(e.to_string()))?;
            for rec in &report.records {
                if let Some(e) = &rec.error {
                    let _ = writeln!(err, "job {}: {}", rec.id, e.message);
                }
            }
            Ok(report.exit_code())
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    execute(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
