mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degharm::sequences::SequenceId;
use degharm::Rational;

use output::Format;

/// Largest |m| accepted without `--allow-large-m`.
const M_CAP: u32 = 8;

#[derive(Parser, Debug)]
#[command(name = "degharm", version, about = "Exact degenerate harmonic numbers and identity checks")]
struct Cli {
    #[command(flatten)]
    shared: Shared,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Shared {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Evaluate at this λ (p or p/q) instead of printing polynomials
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<Rational>,

    /// Seed for the random sequences used by `verify`
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Write λ as L and use ASCII operators in text and CSV output
    #[arg(long, global = true)]
    ascii: bool,

    /// Accept m above 8 (exact but slow)
    #[arg(long, global = true)]
    allow_large_m: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate a sequence
    Table(TableArgs),
    /// Check every registered identity
    Verify(VerifyArgs),
    /// Print coefficients of a generating function
    Series(SeriesArgs),
    /// Compare λ = 0 values with the classical sequence
    Limit(LimitArgs),
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Sequence: H, H_order, K, stirling1_unsigned, stirling1_signed, lah,
    /// derangement, deg_derangement, harmonic, harmonic_order
    #[arg(long)]
    seq: SequenceId,
    /// Largest index
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Order, required by H_order, K and harmonic_order
    #[arg(long)]
    m: Option<u32>,
    /// Single column of a triangular sequence
    #[arg(long)]
    k: Option<u64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 25)]
    max_n: u64,
    #[arg(long, default_value_t = 4)]
    max_m: u32,
    /// Defaults to max(32, max-n)
    #[arg(long)]
    series_order: Option<usize>,
    /// Comma-separated λ samples for the point checks
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda_samples: Option<Vec<Rational>>,
    /// Number of random sequences for the transform identities
    #[arg(long, default_value_t = 50)]
    trials: u32,
    /// Run only these identities (repeatable or comma-separated)
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Include wall-clock timings (makes output non-reproducible)
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GfId {
    #[value(name = "H")]
    H,
    #[value(name = "H_order")]
    HOrder,
    #[value(name = "K")]
    K,
    Polylog,
    Deglog,
    Degexp,
    Stirling,
    Lah,
    Derangement,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    gf: GfId,
    /// Highest power of t to print
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    terms: u64,
    /// Order for H_order, K (m ≥ 1) and polylog (any integer)
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i32>,
    /// Power k for stirling and lah
    #[arg(long)]
    k: Option<u32>,
    /// Argument x of degexp (default 1)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Rational>,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Sequence with a classical counterpart: H, H_order, deg_derangement,
    /// stirling1_unsigned
    #[arg(long)]
    seq: SequenceId,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    k: Option<u64>,
}

/// What a command hands back to `main`.
pub struct Emitted {
    pub stdout: String,
    /// True when an expectation failed (exit status 1).
    pub violated: bool,
}

/// A usage problem; reported on stderr with exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<degharm::Error> for UsageError {
    fn from(e: degharm::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn check_m(m: u32, shared: &Shared) -> Result<(), UsageError> {
    if m > M_CAP && !shared.allow_large_m {
        return Err(UsageError(format!(
            "m = {m} exceeds the default cap of {M_CAP}; pass --allow-large-m to override"
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Emitted, UsageError> {
    let shared = &cli.shared;
    match cli.command {
        Command::Table(a) => {
            if let Some(m) = a.m {
                check_m(m, shared)?;
            }
            commands::table(shared, a.seq, a.n, a.m, a.k)
        }
        Command::Verify(a) => {
            check_m(a.max_m, shared)?;
            commands::verify(shared, a)
        }
        Command::Series(a) => {
            if let Some(m) = a.m {
                check_m(m.unsigned_abs(), shared)?;
            }
            commands::series(shared, a)
        }
        Command::Limit(a) => {
            if let Some(m) = a.m {
                check_m(m, shared)?;
            }
            commands::limit(shared, a)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if out.violated {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
    }
}
