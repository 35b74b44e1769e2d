use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use subrank::counting::DEFAULT_BUDGET;
use subrank::Mode;

/// Count full-rank square submatrices of binary matrices.
#[derive(Debug, Clone, Parser)]
#[command(name = "subrank", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Cap on brute-force work (subsets classified, or candidates searched).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Count singular and full-rank k×k submatrices.
    Count {
        /// Matrix file (`-` for stdin).
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        /// Include the dependent and independent column sets.
        #[arg(long)]
        list_sets: bool,
    },
    /// Print the weight enumerator of the row-space code.
    Weights {
        input: PathBuf,
        /// Also compute the dual enumerator, directly and by MacWilliams.
        #[arg(long)]
        dual: bool,
        /// Largest code dimension to enumerate.
        #[arg(long, default_value_t = subrank::codes::DEFAULT_MAX_DIMENSION)]
        max_dimension: usize,
    },
    /// List dependent and independent k-column sets (1-based).
    Sets { input: PathBuf },
    /// Search systematic k×n matrices for the largest full-rank count.
    Search {
        #[arg(long = "k")]
        k: usize,
        #[arg(long = "n")]
        n: usize,
        /// Try every P block.
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Number of random P blocks to try.
        #[arg(long, required_unless_present = "exhaustive")]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Witness matrices to keep.
        #[arg(long, default_value_t = 10)]
        keep: usize,
    },
    /// Run the self-check battery on a matrix.
    Verify {
        input: PathBuf,
        /// Explicit dual generator to check instead of the computed one.
        #[arg(long)]
        parity: Option<PathBuf>,
        /// Random row-operation sequences.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Formula,
    Oracle,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Auto => Mode::Auto,
            ModeArg::Formula => Mode::Formula,
            ModeArg::Oracle => Mode::Oracle,
            ModeArg::Both => Mode::Both,
        }
    }
}
