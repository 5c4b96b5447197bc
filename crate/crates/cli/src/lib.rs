//! Command-line front end for the `involutive` crate: monomial completion,
//! polynomial bases, basis checking and a small benchmark harness.

pub mod bench;
mod commands;
pub mod input;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use involutive::{DivisionKind, MonomialOrder, VariableContext};
use thiserror::Error;

pub use commands::{basis, check, complete, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_CAP_EXCEEDED: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] involutive::EngineError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Parse(_) => EXIT_PARSE,
            _ => EXIT_OTHER,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "invbasis",
    version,
    about = "Involutive bases of polynomial ideals over Q"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal involutive completion of a monomial set.
    Complete(CompleteArgs),
    /// Involutive (or Groebner) basis of the ideal generated by a polynomial file.
    Basis(BasisArgs),
    /// Run every completion on each file of a corpus directory.
    Bench(BenchArgs),
    /// Check whether a polynomial file is an involutive basis.
    Check(CheckArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// thomas, janet, pommaret, division1 or division2.
    #[arg(long, default_value = "janet", value_parser = parse_division)]
    pub division: DivisionKind,
    /// lex, deglex or degrevlex; overrides a `# order:` line (default deglex).
    #[arg(long, value_parser = parse_order)]
    pub order: Option<MonomialOrder>,
    /// Comma separated variables, largest first; overrides a `# vars:` line.
    #[arg(long, value_parser = parse_vars)]
    pub vars: Option<VariableContext>,
    /// Input file, `-` for standard input.
    pub input: PathBuf,
    /// Write the result here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CompleteArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Maximal number of added prolongations.
    #[arg(long, default_value_t = involutive::completion::DEFAULT_MONOMIAL_CAP, value_parser = parse_cap)]
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Involutive,
    Minimal,
    Buchberger,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug, Clone, Args)]
pub struct BasisArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value = "minimal")]
    pub algorithm: Algorithm,
    /// Maximal number of prolongation normal forms.
    #[arg(long, default_value_t = involutive::engine::DEFAULT_CAP, value_parser = parse_cap)]
    pub cap: usize,
    /// Append the completion trace as comment lines.
    #[arg(long)]
    pub trace: bool,
    /// Check the result: involutive, Groebner and generating the input ideal.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Forget processed variables of elements moved back to the queue.
    #[arg(long)]
    pub reset_processed_on_demotion: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Also check every multiple up to this total degree.
    #[arg(long)]
    pub degree: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Directory of input files; every regular file is one case.
    pub corpus: PathBuf,
    #[arg(long, default_value_t = involutive::engine::DEFAULT_CAP, value_parser = parse_cap)]
    pub cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn parse_division(s: &str) -> Result<DivisionKind, String> {
    s.parse()
        .map_err(|e: involutive::DivisionError| e.to_string())
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse()
}

fn parse_vars(s: &str) -> Result<VariableContext, String> {
    VariableContext::parse_list(s).map_err(|e| e.to_string())
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("cap must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Runs `cli`, writing results to `out` (unless an output file is given)
/// and diagnostics to `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match &cli.command {
        Command::Complete(args) => {
            with_output(&args.common.output, out, |w| complete(args, w, err))
        }
        Command::Basis(args) => with_output(&args.common.output, out, |w| basis(args, w, err)),
        Command::Check(args) => with_output(&args.common.output, out, |w| check(args, w, err)),
        Command::Bench(args) => bench::run(args, out, err),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "invbasis: {e}");
            e.exit_code()
        }
    }
}

fn with_output(
    path: &Option<PathBuf>,
    out: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<i32, CliError>,
) -> Result<i32, CliError> {
    let Some(path) = path else {
        return body(out);
    };
    let mut buffer = Vec::new();
    let code = body(&mut buffer)?;
    std::fs::write(path, buffer).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(code)
}

pub(crate) fn io_error(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}
