//! Command-line front end for the two-denominator coin problem: Frobenius
//! numbers, membership checks with witnesses/certificates, gap sets,
//! solution tables, representation chains, a Pick's-theorem audit, and an
//! SVG plot of the line family.
//!
//! Exit codes: 0 on success, 2 on validation errors (bad arguments or
//! violated preconditions), 3 on integer overflow, 4 on an internal
//! invariant violation.

mod render;
mod svg;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use twocoin::diophantine::{self, CoinPair};
use twocoin::inductive;
use twocoin::{frobenius, geometry, Error};

#[derive(Parser)]
#[command(
    name = "twocoin",
    version,
    about = "Coin problems with two denominations: which amounts are payable, and how"
)]
struct Cli {
    /// Output format for data subcommands (`plot` always emits SVG)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Also print certificates where available
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the largest amount with no non-negative representation
    Frobenius { a: i64, b: i64 },

    /// Decide whether d is representable; print a witness or a certificate
    Check {
        a: i64,
        b: i64,
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },

    /// Count the non-negative representations of d
    Count {
        a: i64,
        b: i64,
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },

    /// List every amount that cannot be paid, in ascending order
    Gaps { a: i64, b: i64 },

    /// Print all non-negative solutions of a·x + b·y = d
    Solve {
        a: i64,
        b: i64,
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },

    /// Solution table for every amount 1..=d_max
    Table {
        a: i64,
        b: i64,
        #[arg(allow_negative_numbers = true)]
        d_max: i64,
    },

    /// Draw the lines a·x + b·y = d for 1..=d_max as an SVG document
    Plot {
        a: i64,
        b: i64,
        #[arg(allow_negative_numbers = true)]
        d_max: i64,
        /// Image width in pixels
        #[arg(long, default_value_t = 800, value_parser = clap::value_parser!(u32).range(100..=100_000))]
        width: u32,
        /// Image height in pixels
        #[arg(long, default_value_t = 600, value_parser = clap::value_parser!(u32).range(100..=100_000))]
        height: u32,
    },

    /// Audit Pick's identity on the parallelogram tied to the largest gap
    Pick { a: i64, b: i64 },

    /// Representation chain from the first amount past the largest gap
    Chain {
        a: i64,
        b: i64,
        #[arg(allow_negative_numbers = true)]
        d_max: i64,
    },
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Lib(err) => write!(f, "{err}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Lib(err)
    }
}

fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Usage(_) => 2,
        CliError::Lib(Error::Overflow) => 3,
        CliError::Lib(Error::BijectionViolation { .. } | Error::ChainBroken { .. }) => 4,
        CliError::Lib(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let format = cli.format.unwrap_or(Format::Text);
    match cli.command {
        Command::Frobenius { a, b } => {
            let pair = CoinPair::new(a, b)?;
            let number = frobenius::frobenius_number(pair)?;
            let certificate = match (cli.verbose, number) {
                (true, Some(f)) => Some(diophantine::canonical_solution(pair, f)?),
                _ => None,
            };
            Ok(render::frobenius(a, b, number, certificate, format))
        }
        Command::Check { a, b, d } => {
            let pair = CoinPair::new(a, b)?;
            let verdict = frobenius::is_representable(pair, d)?;
            Ok(render::check(a, b, &verdict, format))
        }
        Command::Count { a, b, d } => {
            let pair = CoinPair::new(a, b)?;
            let count = frobenius::count_representations(pair, d)?;
            Ok(render::count(a, b, d, count, format))
        }
        Command::Gaps { a, b } => {
            let pair = CoinPair::new(a, b)?;
            let gaps = frobenius::gaps(pair)?;
            Ok(render::gaps(&gaps, format))
        }
        Command::Solve { a, b, d } => {
            let pair = CoinPair::new(a, b)?;
            let solutions = diophantine::nonneg_solutions(pair, d)?;
            Ok(render::solve(&solutions, format))
        }
        Command::Table { a, b, d_max } => {
            let pair = CoinPair::new(a, b)?;
            require_positive_d_max(d_max)?;
            let rows = render::table_rows(pair, d_max)?;
            Ok(render::table(pair, &rows, format))
        }
        Command::Plot { a, b, d_max, width, height } => {
            if cli.format.is_some() {
                return Err(CliError::Usage(
                    "plot always emits SVG; --format does not apply".to_string(),
                ));
            }
            let pair = CoinPair::new(a, b)?;
            require_positive_d_max(d_max)?;
            Ok(svg::render(pair, d_max, width, height)?)
        }
        Command::Pick { a, b } => {
            let pair = CoinPair::new(a, b)?;
            let audit = geometry::pick_audit(&geometry::frobenius_parallelogram(pair)?)?;
            Ok(render::pick(a, b, &audit, format))
        }
        Command::Chain { a, b, d_max } => {
            let pair = CoinPair::new(a, b)?;
            let steps = inductive::inductive_chain(pair, d_max)?;
            Ok(render::chain(&steps, format))
        }
    }
}

fn require_positive_d_max(d_max: i64) -> Result<(), CliError> {
    if d_max < 1 {
        return Err(CliError::Usage(format!("d_max must be at least 1, got {d_max}")));
    }
    Ok(())
}
