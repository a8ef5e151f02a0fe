use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "lctreg",
    version,
    about = "Regularity, log-canonical thresholds and multiplier ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output style: human-readable text or one JSON record per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Term order used when printing generators and Gröbner bases.
    #[arg(long, value_enum, default_value_t = Order::Grevlex, global = true)]
    pub order: Order,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Lex,
    Grevlex,
}

/// An ideal given inline or read from a file.
#[derive(Debug, Args)]
pub struct Input {
    /// Ideal in the input grammar, e.g. "vars x0..x2; x0^2, x1*x2^2".
    pub ideal: Option<String>,
    /// Read the ideal from a file instead; lines starting with `#` are ignored.
    #[arg(long, short = 'f', conflicts_with = "ideal")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Mode {
    /// Regularity of the saturation (the ideal sheaf).
    #[arg(long, conflicts_with = "module")]
    pub sheaf: bool,
    /// Regularity of the ideal as given.
    #[arg(long)]
    pub module: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Castelnuovo–Mumford regularity (sheaf mode by default).
    Reg {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        mode: Mode,
    },
    /// Graded Betti numbers of the ideal (module mode by default).
    Betti {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        mode: Mode,
    },
    /// Saturation with respect to the irrelevant ideal.
    Saturate {
        #[command(flatten)]
        input: Input,
    },
    /// Log-canonical threshold of a monomial ideal with its LP certificate.
    Lct {
        #[command(flatten)]
        input: Input,
    },
    /// Multiplier ideals of a monomial ideal.
    Multiplier {
        #[command(flatten)]
        input: Input,
        /// Weight `p/q`; repeat for several.
        #[arg(long = "c", required = true)]
        c: Vec<String>,
    },
    /// Integral closure of a monomial ideal.
    Intclosure {
        #[command(flatten)]
        input: Input,
    },
    /// Whether a polynomial lies in the radical.
    RadicalMember {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        poly: String,
    },
    /// Whether a polynomial is integral over the ideal.
    IntegralMember {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        poly: String,
        /// Largest power tried.
        #[arg(long, default_value_t = lctreg::integrality::DEFAULT_MAX_K)]
        max_k: u32,
    },
    /// Every inequality and conjecture check on one monomial ideal.
    Check {
        #[command(flatten)]
        input: Input,
        /// Multiplier weights; defaults to lct, 1/2, 1, 3/2, 2.
        #[arg(long = "c")]
        c: Vec<String>,
        /// Length of the fraction sequence.
        #[arg(long, default_value_t = lctreg::harness::DEFAULT_FRACTION_K)]
        max_k: u32,
    },
    /// Run the checks over a seeded random corpus.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        nvars: usize,
        #[arg(long, default_value_t = 4)]
        max_exp: u32,
        #[arg(long, default_value_t = 1)]
        min_gens: usize,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
        /// Report file, one JSON record per ideal.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "c")]
        c: Vec<String>,
        #[arg(long, default_value_t = lctreg::harness::DEFAULT_FRACTION_K)]
        max_k: u32,
        /// Disable the parallel map.
        #[arg(long)]
        sequential: bool,
    },
    /// The sequence reg 𝒥(k·lct·I)/k for k = 1..max-k.
    Fractions {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = lctreg::harness::DEFAULT_FRACTION_K)]
        max_k: u32,
    },
}
