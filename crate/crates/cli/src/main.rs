//! `cox`: command-line front end for the coxwork library.
//!
//! Exit codes: 0 on success, 1 when a domain check or verification fails,
//! 2 on usage errors (bad flags, unreadable or malformed input).

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use coxwork::{aci, essential};

#[derive(Parser, Debug)]
#[command(name = "cox", version, about = "Exact computations in Coxeter groups")]
pub struct Cli {
    /// Emit machine-readable JSON with keys verb, inputs, result, certificates, undecided.
    #[arg(long, global = true)]
    pub json: bool,

    /// Add decimal hints (12 digits) next to exact values. Not authoritative.
    #[arg(long, global = true)]
    pub approx: bool,

    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Args, Debug, Clone)]
pub struct SystemArg {
    /// A `.cox` file, or the name of a bundled system such as `affine_A2`.
    #[arg(long)]
    pub system: String,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Connected components of the Coxeter graph.
    Components(SystemArg),
    /// Classify each component as finite, affine, compact hyperbolic or other.
    Classify(SystemArg),
    /// Positive roots reached within a number of reflection steps.
    Roots {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long, default_value_t = essential::DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Length of a word and its inversion set.
    Length {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long)]
        word: String,
    },
    /// Canonical reduced word.
    Reduce {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long)]
        word: String,
    },
    /// Longest element of a finite standard parabolic subgroup.
    Longest {
        #[command(flatten)]
        sys: SystemArg,
        /// Generators, e.g. "1 2" or "{1,2}"; all generators by default.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Order of an element, with a certificate when infinite.
    Order {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = essential::DEFAULT_CAP)]
        cap: u64,
    },
    /// Steinberg generators and Coxeter matrix of the fixed-point subgroup.
    Fixed {
        #[command(flatten)]
        sys: SystemArg,
        /// Automorphism in cycle notation, e.g. "(1 3)".
        #[arg(long)]
        tau: String,
        #[arg(long, default_value_t = essential::DEFAULT_CAP)]
        cap: u64,
    },
    /// Whether the fixed-point subgroup of an automorphism has finite index.
    FiniteIndex {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long)]
        tau: String,
    },
    /// Odd roots of an element and whether their reflections generate W.
    Essential {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = essential::DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, default_value_t = essential::DEFAULT_CAP)]
        cap: u64,
    },
    /// The subgroup generated by almost central involutions of W x| G.
    Aci {
        #[command(flatten)]
        sys: SystemArg,
        /// File of `gen (cycles)` lines generating G; trivial G when absent.
        #[arg(long)]
        action: Option<PathBuf>,
        /// Semidirect element "w-word ; g-index" to test.
        #[arg(long)]
        query: Option<String>,
        /// Ball radius for the conjugate-growth certificate.
        #[arg(long, default_value_t = 60)]
        radius: usize,
        /// Distinct conjugates required by the growth certificate.
        #[arg(long, default_value_t = 25)]
        target: usize,
        /// Cap on the order of G.
        #[arg(long, default_value_t = aci::DEFAULT_GROUP_CAP)]
        cap: usize,
    },
    /// Verify the bundled affine and compact hyperbolic witness tables.
    VerifyTables {
        /// Only table 1 (affine) or 2 (compact hyperbolic).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        table: Option<u8>,
    },
    /// Brute-force check of the ACI description for a finite W x| G.
    Oracle {
        #[command(flatten)]
        sys: SystemArg,
        #[arg(long)]
        action: Option<PathBuf>,
        /// Cap on |W x| G|.
        #[arg(long, default_value_t = aci::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                for l in &report.lines {
                    println!("{l}");
                }
            }
            ExitCode::from(report.exit as u8)
        }
        Err(e) => {
            eprintln!("cox: {e}");
            ExitCode::from(e.code())
        }
    }
}
