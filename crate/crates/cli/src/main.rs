//! `selfdesc`: command-line front end for the selfdesc library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain
//! violation, 4 resource cap.

mod commands;
mod output;

use std::fmt;
use std::io;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::output::OutputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "selfdesc",
    version,
    about = "Self-describing sequences and the Catalan family tree"
)]
struct Cli {
    /// Highest generation brute-force commands may enumerate.
    #[arg(long, global = true, default_value_t = selfdesc::census::DEFAULT_CAP)]
    cap: usize,

    /// Worker threads for censuses (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,

    /// Output format for tabular commands (count defaults to json-lines,
    /// the other commands to plain text).
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply δ, γ or μ to a sequence.
    Transform { endo: String, seq: String },

    /// Iterate an endomorphism until the orbit closes.
    Orbit {
        endo: String,
        seq: String,
        /// Application budget (default: the stabilization bound).
        #[arg(long)]
        max_steps: Option<usize>,
    },

    /// List the sequences of one generation.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumerateKind,
        n: usize,
        #[arg(long)]
        m: Option<u32>,
    },

    /// Count per generation, by brute force and closed form where both exist.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        /// A generation `n` or an inclusive range `a..b`.
        range: String,
        #[arg(long)]
        m: Option<u32>,
    },

    /// Run the exhaustive invariant suite.
    Verify {
        #[arg(value_enum, default_value = "quick")]
        level: VerifyLevel,
        /// Swap in a deliberately broken transform.
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<Fault>,
    },

    /// Ballot-word encoding, decoding and West-tree labels.
    Biject {
        #[arg(value_enum)]
        direction: Direction,
        /// A sequence, or a ballot word such as `++--` or `[2]--`.
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        m: Option<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateKind {
    All,
    Family,
    Fixed,
    Double,
    UnitIncrease,
    MIncrease,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Fixed,
    Double,
    Family,
    NameDist,
    UnitIncrease,
    UnitDist,
    MIncrease,
    Catalan,
    FussCatalan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyLevel {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Encode,
    Decode,
    West,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub const VERIFY: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const DOMAIN: u8 = 3;
    pub const CAP: u8 = 4;

    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<selfdesc::Error> for CliError {
    fn from(e: selfdesc::Error) -> Self {
        use selfdesc::Error::*;
        let code = match e {
            Empty | Parse { .. } | BallotSyntax(_) | InvalidArgument(_) => CliError::PARSE,
            NotInA { .. }
            | LengthMismatch { .. }
            | NotIncreaseBounded { .. }
            | MalformedBallot(_)
            | BudgetExceeded { .. } => CliError::DOMAIN,
            CapExceeded { .. } => CliError::CAP,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        // a closed downstream pipe ends the output quietly
        if e.kind() == io::ErrorKind::BrokenPipe {
            return CliError::new(0, "");
        }
        CliError::new(1, format!("write failed: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.code == 0 => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("selfdesc: {e}");
            ExitCode::from(e.code)
        }
    }
}
