//! `exmat` — command-line toolkit for forbidden 0-1 matrix research.

mod commands;
mod formats;
mod report;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

/// Exit code for malformed invocations and unreadable inputs.
pub const EXIT_USAGE: i32 = 64;
/// Exit code for scale and resource refusals.
pub const EXIT_SCALE: i32 = 65;

/// A command error carrying its intended process exit code.
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_USAGE, message: message.into() }
    }

    pub fn scale(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_SCALE, message: message.into() }
    }

    pub fn other(message: impl Into<String>) -> CliError {
        CliError { code: 2, message: message.into() }
    }
}

#[derive(Parser)]
#[command(
    name = "exmat",
    version,
    about = "Forbidden 0-1 matrix toolkit: constructions, containment, extremal search, classification"
)]
struct Cli {
    /// Worker threads. All computations are deterministic and outputs are
    /// identical for every value; the flag is accepted for pipeline
    /// compatibility.
    #[arg(long, global = true, default_value_t = 1)]
    threads: u32,

    /// Include wall-clock timing in JSON reports (reports are otherwise
    /// byte-identical across runs with the same inputs and seed).
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate construction matrices and pattern families.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Decide whether a pattern occurs in a host matrix.
    Contains(ContainsArgs),
    /// Check structural properties of the block construction.
    Verify(VerifyArgs),
    /// Report the construction's weight against its density bound.
    Density(DensityArgs),
    /// Compute extremal numbers Ex(P, n) at desk scale.
    Extremal(ExtremalArgs),
    /// Classify a pattern: lightness, permutation, acyclicity, degeneracy.
    Classify(ClassifyArgs),
    /// Search for a shortest chain of single-1 line removals.
    Reduce(ReduceArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Write the block construction matrix A_t in sparse text format.
    Construction(GenConstructionArgs),
    /// Write a pattern from the X_t/P_t/Q_t families or the named catalog.
    Pattern(GenPatternArgs),
}

#[derive(Args)]
struct GenConstructionArgs {
    /// Number of blocks (t >= 2).
    #[arg(long)]
    t: u32,
    /// Block length (k >= 2).
    #[arg(long)]
    k: u32,
    /// Output file; `-` for stdout.
    #[arg(short, long)]
    output: String,
    /// Refuse to materialize matrices with side beyond this.
    #[arg(long, default_value_t = exmat_core::construction::DEFAULT_BUILD_CAP)]
    cap: u64,
}

#[derive(Args)]
struct GenPatternArgs {
    /// Pattern family: `Pt`, `Qt`, or `Xt` (used with --t).
    #[arg(long, conflicts_with = "name")]
    family: Option<String>,
    /// Family parameter t >= 2.
    #[arg(long)]
    t: Option<u32>,
    /// Catalog name: R1, R2, S1, S2, T, identity(k), one_row(l).
    #[arg(long)]
    name: Option<String>,
    /// Output file; `-` for stdout.
    #[arg(short, long)]
    output: String,
}

#[derive(Args)]
struct ContainsArgs {
    /// Pattern file (text format).
    #[arg(long)]
    pattern: String,
    /// Host matrix file (sparse text format).
    #[arg(long)]
    matrix: String,
    /// Include an embedding witness in the JSON report.
    #[arg(long)]
    witness: bool,
    /// Enumerate up to LIMIT occurrences (lexicographically first).
    #[arg(long, value_name = "LIMIT")]
    count: Option<u64>,
    /// JSON report destination; `-` for stdout.
    #[arg(long)]
    json: Option<String>,
    /// Search-node budget before giving up with an error.
    #[arg(long, default_value_t = exmat_core::containment::DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of blocks (t >= 2).
    #[arg(long)]
    t: u32,
    /// Block length (k >= 2).
    #[arg(long)]
    k: u32,
    /// Comma-separated checks out of: 1,2,3,4,5,r4,r5,P,Q,avoidance,all.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Force sampled mode with this many valid configurations per check.
    #[arg(long)]
    samples: Option<u64>,
    /// Seed for sampled modes.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON report destination; `-` for stdout.
    #[arg(long)]
    json: Option<String>,
    /// Cap on the materialized matrix side for checks that need A_t.
    #[arg(long, default_value_t = exmat_core::construction::DEFAULT_BUILD_CAP)]
    cap: u64,
    /// Search-node budget for the avoidance check.
    #[arg(long, default_value_t = exmat_core::containment::DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct DensityArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    k: u32,
    /// JSON report destination; `-` for stdout.
    #[arg(long)]
    json: Option<String>,
}

#[derive(Args)]
struct ExtremalArgs {
    /// Pattern file (text format).
    #[arg(long)]
    pattern: String,
    /// Host side length.
    #[arg(long)]
    n: u64,
    /// Method: bnb, exhaustive, or greedy.
    #[arg(long)]
    method: String,
    /// Seed for the greedy method.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON report destination; `-` for stdout.
    #[arg(long)]
    json: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Pattern file (text format).
    #[arg(long)]
    pattern: String,
    /// JSON report destination; `-` for stdout.
    #[arg(long)]
    json: Option<String>,
}

#[derive(Args)]
struct ReduceArgs {
    /// Pattern file (text format).
    #[arg(long)]
    pattern: String,
    /// Stop once the reduced pattern's weight is at most this.
    #[arg(long)]
    target_weight: u64,
    /// JSON report destination; `-` for stdout.
    #[arg(long)]
    json: Option<String>,
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    return 0;
                }
                _ => EXIT_USAGE,
            };
            eprint!("{e}");
            return code;
        }
    };
    let started = std::time::Instant::now();
    let timings = cli.timings;
    let result = match cli.command {
        Command::Gen(GenCommand::Construction(args)) => commands::gen_construction(args),
        Command::Gen(GenCommand::Pattern(args)) => commands::gen_pattern(args),
        Command::Contains(args) => commands::contains(args, timings, started),
        Command::Verify(args) => commands::verify(args, timings, started),
        Command::Density(args) => commands::density(args, timings, started),
        Command::Extremal(args) => commands::extremal(args, timings, started),
        Command::Classify(args) => commands::classify(args, timings, started),
        Command::Reduce(args) => commands::reduce(args, timings, started),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("exmat: {}", e.message);
            e.code
        }
    }
}
