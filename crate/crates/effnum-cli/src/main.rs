//! `effnum` — evaluate effective-number measures on weight vectors, verify
//! arbitrary measures against the defining axioms, count quantum identities,
//! and run localization scaling studies.

mod commands;
mod io;
mod measures;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Errors with the exit-code contract: 1 runtime failure, 2 parse/usage,
/// 3 constraint violation. Exit 1 is also used (without an error) when a
/// verification suite reports failures.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Constraint(String),
    Runtime(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Constraint(_) => 3,
            CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg)
            | CliError::Parse(msg)
            | CliError::Constraint(msg)
            | CliError::Runtime(msg) => f.write_str(msg),
        }
    }
}

impl From<effnum::Error> for CliError {
    fn from(e: effnum::Error) -> Self {
        use effnum::Error as E;
        match e {
            E::BadAlpha(_) | E::InvalidArgument(_) => CliError::Usage(e.to_string()),
            E::EvalFailed(_) | E::NoConvergence(_) => CliError::Runtime(e.to_string()),
            _ => CliError::Constraint(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "effnum",
    version,
    about = "Effective numbers of weighted collections: evaluation, axiom verification, quantum identity counting, localization studies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate measures on weight or probability vectors
    Eval(EvalArgs),
    /// Run the axiom verification suite against a measure
    Verify(VerifyArgs),
    /// Count quantum identities of states
    Count(CountArgs),
    /// Disorder-averaged localization scaling study
    Localize(LocalizeArgs),
    /// Sweep the alpha family over each input vector
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
    Table,
}

impl FormatArg {
    fn to_format(self) -> io::Format {
        match self {
            FormatArg::Csv => io::Format::Csv,
            FormatArg::Json => io::Format::Json,
            FormatArg::Table => io::Format::Table,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    /// Counting vectors: nonnegative rows summing to their length
    Weights,
    /// Probability vectors: nonnegative rows summing to 1
    Prob,
    /// Complex amplitude vectors (count only)
    State,
}

#[derive(Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct EvalArgs {
    /// Input file (CSV rows or JSON array of arrays; `-` for stdin)
    file: PathBuf,
    /// How to interpret input rows
    #[arg(long, value_enum, default_value = "weights")]
    input: InputKind,
    /// Measures to report (repeatable or comma-separated); default covers
    /// n_star, n_plus, the alpha grid, participation, exp_shannon, f_star
    #[arg(long)]
    measure: Vec<String>,
    /// Alpha grid for the default measure set
    #[arg(long)]
    alpha: Option<String>,
    /// Rescale rows violating the sum constraint instead of rejecting them
    #[arg(long)]
    renormalize: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Measure name (n_star, n_plus, alpha:<a>, participation, exp_shannon)
    /// or path to a tabulated counting-function file
    target: String,
    /// Randomized trials per axiom
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// RNG seed (defaults to EFFNUM_SEED, then 42)
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMode {
    /// Count identities from the standard basis
    Basis,
    /// Count identities from an orthonormal subset (--structure <file>)
    Subset,
    /// Count orthogonal subspaces (--structure "1,2|3,4", 1-based)
    Partition,
}

#[derive(Args)]
pub struct CountArgs {
    /// State file: CSV rows of amplitudes (`re`, `re+imj`) or JSON rows of
    /// numbers / [re, im] pairs
    file: PathBuf,
    /// How to interpret input rows (count works on states)
    #[arg(long, value_enum, default_value = "state")]
    input: InputKind,
    #[arg(long, value_enum, default_value = "basis")]
    mode: CountMode,
    /// Subset vector file or partition spec, depending on --mode
    #[arg(long)]
    structure: Option<String>,
    /// Measures to report; subset/partition modes accept counting-function
    /// measures (n_star, n_plus, alpha:<a>)
    #[arg(long)]
    measure: Vec<String>,
    /// Rescale states that are not normalized instead of rejecting them
    #[arg(long)]
    renormalize: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BandArg {
    Ground,
    #[value(name = "mid-band")]
    MidBand,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryArg {
    Open,
    Periodic,
}

#[derive(Args)]
pub struct LocalizeArgs {
    /// Chain sizes, strictly increasing (e.g. 64,128,256)
    #[arg(long)]
    sizes: String,
    /// Disorder realizations per size
    #[arg(long, default_value_t = 8)]
    ensemble: usize,
    /// Eigenstate to track
    #[arg(long, value_enum, default_value = "ground")]
    band: BandArg,
    /// Half-width of the uniform on-site disorder
    #[arg(long, default_value_t = 0.0)]
    disorder: f64,
    /// Hopping amplitude
    #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
    hopping: f64,
    #[arg(long, value_enum, default_value = "open")]
    boundary: BoundaryArg,
    /// RNG seed (defaults to EFFNUM_SEED, then 42)
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
pub struct SweepArgs {
    /// Input file (CSV rows or JSON array of arrays; `-` for stdin)
    file: PathBuf,
    #[arg(long, value_enum, default_value = "weights")]
    input: InputKind,
    /// Alpha grid; defaults to 33 log-spaced points on [1e-4, 1]
    #[arg(long)]
    alpha: Option<String>,
    /// Rescale rows violating the sum constraint instead of rejecting them
    #[arg(long)]
    renormalize: bool,
    #[command(flatten)]
    output: OutputArgs,
}

/// Seed precedence: flag, then EFFNUM_SEED, then 42.
fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("EFFNUM_SEED") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| CliError::Usage(format!("EFFNUM_SEED=`{raw}` is not a 64-bit integer"))),
        Err(_) => Ok(42),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Eval(args) => commands::eval(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Count(args) => commands::count(&args),
        Command::Localize(args) => commands::localize(&args),
        Command::Sweep(args) => commands::sweep(&args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
