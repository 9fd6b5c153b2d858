//! `brill`: command-line front end to the Brill's-equations toolkit.

mod commands;
mod config;
mod eval;

use std::path::PathBuf;
use std::process::ExitCode;

use brill_core::chow::SampleKind;
use brill_core::rep::Partition;
use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CliError, Output};
use config::{Caps, RunConfig, DEFAULT_COLUMN_CAP, DEFAULT_TERM_CAP};

#[derive(Parser)]
#[command(name = "brill", version, about = "Exact computations with Brill's equations of the Chow variety")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Maximum estimated number of terms in any intermediate element.
    #[arg(long, global = true, env = "BRILL_TERM_CAP", default_value_t = DEFAULT_TERM_CAP)]
    term_cap: u128,
    /// Maximum number of columns in an exact elimination.
    #[arg(long, global = true, env = "BRILL_COLUMN_CAP", default_value_t = DEFAULT_COLUMN_CAP)]
    column_cap: usize,
}

#[derive(Args)]
struct Shape {
    /// Degree of the forms.
    #[arg(long)]
    d: u32,
    /// Dimension of V.
    #[arg(long, default_value_t = 3)]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Chow,
    Generic,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a form is a product of linear forms (exit 0) or not (exit 1).
    Membership {
        /// JSON file holding an element of S^dV.
        #[arg(long)]
        poly: PathBuf,
        #[command(flatten)]
        shape: Shape,
    },
    /// Check which Pieri components lie in the image of the polarized Brill map.
    VerifyTheorem {
        #[arg(long)]
        d: u32,
        /// Largest d for which the generic polarization path is evaluated.
        #[arg(long, default_value_t = 4)]
        max_generic_d: u32,
    },
    /// Write Brill's equations for the general form of degree d.
    Gen {
        #[command(flatten)]
        shape: Shape,
        /// Output JSON file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the highest weight vector of weight (d²-j, d, j).
    Hwv {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        j: u32,
    },
    /// Multiplicity of S_λC³ in S^k(S^dC³).
    Multiplicity {
        /// Partition, e.g. 4,2.
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
    },
    /// Tabulate the pairing values for d = 2..=dmax.
    PairingTable {
        #[arg(long)]
        dmax: u32,
        /// Largest d for which the generic polarization path is evaluated.
        #[arg(long, default_value_t = 4)]
        max_generic_d: u32,
    },
    /// Print a seeded random form, either a product of linear forms or generic.
    Sample {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Kind::Chow)]
        kind: Kind,
    },
    /// Evaluate a single operation described by a JSON request.
    Eval {
        /// JSON request file.
        request: PathBuf,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let caps = Caps {
        terms: cli.caps.term_cap,
        columns: cli.caps.column_cap,
    };
    let cfg = |shape: &Shape| RunConfig::new(shape.d, shape.n, caps).map_err(CliError::from);
    match cli.command {
        Command::Membership { poly, shape } => commands::membership(&cfg(&shape)?, &poly),
        Command::VerifyTheorem { d, max_generic_d } => commands::verify_theorem(d, max_generic_d, &caps),
        Command::Gen { shape, out } => commands::gen(&cfg(&shape)?.with_out(out)),
        Command::Hwv { d, j } => commands::hwv(d, j),
        Command::Multiplicity { lambda, k, d } => commands::multiplicity_cmd(&lambda, k, d, &caps),
        Command::PairingTable { dmax, max_generic_d } => {
            commands::pairing_table_cmd(dmax, max_generic_d, &caps)
        }
        Command::Sample { shape, seed, kind } => {
            let kind = match kind {
                Kind::Chow => SampleKind::Chow,
                Kind::Generic => SampleKind::Generic,
            };
            commands::sample_cmd(&cfg(&shape)?.with_seed(seed), kind)
        }
        Command::Eval { request } => commands::eval(&request),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
