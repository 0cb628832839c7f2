//! `choquet`: evaluate signed Choquet integrals, transform set functions and
//! run axiom checks from the command line.
//!
//! Exit codes: 0 success (or axiom satisfied), 1 axiom falsified or
//! independence pattern not reproduced, 2 usage or parse error, 3 dimension
//! mismatch, 4 input is not a game (nonzero value on the empty set).

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use choquet_core::{Axiom, Family, Subset};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "choquet", version, about)]
struct Cli {
    /// Output format for results.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Run sampled trials on a single thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Signed,
    Monotone,
    NormalizedMonotone,
}

#[derive(Args)]
pub struct Sampling {
    /// Random trials per check.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,

    /// RNG seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Relative tolerance for passing samples (absolute floor 1e-12).
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the signed Choquet integral (or the Lovász extension) at a point.
    Eval {
        #[arg(long)]
        capacity: PathBuf,
        /// Comma-separated coordinates, e.g. 4,0,2.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Accept any set function and add its empty-set value as an offset.
        #[arg(long)]
        lovasz: bool,
    },
    /// Write the Möbius transform of a set function.
    Mobius {
        #[arg(long)]
        capacity: PathBuf,
        /// Apply the zeta transform (the inverse) instead.
        #[arg(long)]
        invert: bool,
        /// Destination file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check one axiom by sampling; exits 1 when it is falsified.
    Check {
        #[arg(long, value_parser = parse_axiom)]
        axiom: Axiom,
        #[arg(long, value_parser = parse_family, default_value = "choquet")]
        family: Family,
        /// Capacity file; a random signed capacity on [n] is drawn when omitted.
        #[arg(long)]
        capacity: Option<PathBuf>,
        /// Ground-set size for the random capacity.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=20))]
        n: u64,
        /// Basis game for interval-scale and zero-on-basis, e.g. 1,2; drawn per trial when omitted.
        #[arg(long, value_parser = parse_subset)]
        subset: Option<Subset>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Run the three counterexample families against the three characterization conditions.
    IndependenceSuite {
        /// Evaluate only the fixed witnesses; draw no random trials.
        #[arg(long)]
        paper_witnesses_only: bool,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Write a random capacity.
    RandomCapacity {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=20))]
        n: u64,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Brute-force reference computations.
    #[command(hide = true)]
    Oracle {
        #[arg(long)]
        capacity: PathBuf,
        /// Also list the values over every sorting permutation of this point.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
}

fn parse_axiom(s: &str) -> Result<Axiom, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Axiom::ALL.iter().map(|a| a.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_subset(s: &str) -> Result<Subset, String> {
    s.parse().map_err(|e: choquet_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
