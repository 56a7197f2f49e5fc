use clap::{Parser, Subcommand, ValueEnum};
use powideal::oracle::DEFAULT_MAX_BLOCK_ENTRIES;
use std::path::PathBuf;

const POLY_SYNTAX: &str = "\
Polynomial output syntax: terms joined by ` + ` / ` - `, each term \
`c*x0^a0*x1^a1*...` with variables of exponent zero omitted, exponent 1 \
written as the bare variable, and unit coefficients left implicit \
(e.g. `x0^4 - 2*x0^2*x1^2 + x1^4`).";

#[derive(Debug, Parser)]
#[command(name = "powideal", version, about = "Hilbert functions, series and Betti numbers for power ideals on roots-of-unity points, with brute-force oracles", after_long_help = POLY_SYNTAX)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for sweeps and oracle blocks (1 = sequential)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Append-only JSONL result cache (default: $POWIDEAL_CACHE if set)
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Largest matrix (rows x cols) the oracles will build
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_BLOCK_ENTRIES)]
    pub max_block_entries: usize,

    /// In sweeps, record guard refusals as skipped instead of failing
    #[arg(long, global = true)]
    pub skip_guarded: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of the power-ideal quotient
    Hf {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
        /// Print a single degree instead of the whole table
        #[arg(long)]
        degree: Option<u32>,
        /// proved-k2 | conjectured | oracle | duality | comp | series
        /// (default: proved-k2 when k=2, conjectured otherwise)
        #[arg(long)]
        method: Option<String>,
    },
    /// Hilbert-series numerator over (1-t)^{n+1}
    Series {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
        /// Compute the numerator from the Hilbert-function table instead of
        /// requiring the closed form
        #[arg(long)]
        from_hf: bool,
    },
    /// Betti numbers of the fat-point quotient
    Betti {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
    },
    /// Number of minimal generators of the power ideal
    Gens {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
    },
    /// Hilbert function / series / generators of the fat-point scheme
    Fatpoints {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Multiplicity of the fat points
        #[arg(long)]
        d: u32,
        /// Evaluate the Hilbert function at this degree
        #[arg(long)]
        degree: Option<u32>,
        /// Use the interpolation-matrix rank instead of the series
        #[arg(long)]
        oracle: bool,
        /// Emit the generator polynomials
        #[arg(long)]
        gens: bool,
    },
    /// Cross-check methods over a parameter sweep
    Verify {
        /// Range for n: `A` or `A:B` (inclusive)
        #[arg(long)]
        n: String,
        /// Range for k: `A` or `A:B` (inclusive)
        #[arg(long)]
        k: String,
        /// Range for d: `A` or `A:B` (inclusive)
        #[arg(long)]
        d: String,
        /// `all` or a range `A:B` of degrees to compare
        #[arg(long, default_value = "all")]
        degrees: String,
        /// Comma-separated method list
        #[arg(long, default_value = "conjectured,comp,duality")]
        methods: String,
    },
}

/// Inclusive integer range written `A` or `A:B`.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let parse_one = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad integer `{t}`: {e}"));
    match s.split_once(':') {
        None => {
            let v = parse_one(s)?;
            Ok((v, v))
        }
        Some((lo, hi)) => {
            let lo = parse_one(lo)?;
            let hi = parse_one(hi)?;
            if lo > hi {
                return Err(format!("empty range `{s}`"));
            }
            Ok((lo, hi))
        }
    }
}
