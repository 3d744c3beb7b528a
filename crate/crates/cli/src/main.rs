//! `airystable` command-line interface.
//!
//! Exit codes: 0 success, 2 invalid parameters, 3 numerical failure,
//! 4 verification failure.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use airystable::{EvalMethod, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "airystable",
    version,
    about = "Higher-order Airy functions, pseudo-densities and stable laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, allow_negative_numbers = true)]
    x_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    x_max: f64,
    #[arg(long, allow_negative_numbers = true)]
    step: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    /// Series when its error bound is within --tol, quadrature otherwise
    Auto,
    Series,
    Quadrature,
}

impl From<Method> for EvalMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Auto => EvalMethod::Auto,
            Method::Series => EvalMethod::Series,
            Method::Quadrature => EvalMethod::Quadrature,
        }
    }
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Absolute tolerance of the quadrature oracles
    #[arg(long, default_value_t = 1e-13)]
    tol: f64,
}

#[derive(Debug, Args)]
struct OutArgs {
    /// Output file; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct OrderArgs {
    /// Real order α > 1
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Odd order 2n+1 given by n >= 1
    #[arg(long)]
    odd: Option<u32>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SampleKind {
    Subordinator,
    Stable,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate Ai_α on a grid
    Airy {
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        eval: EvalArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Tabulate the pseudo-density, optionally time-changed by a stable subordinator
    Density {
        #[command(flatten)]
        order: OrderArgs,
        /// Subordinator index; 1 means no time change
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        t: f64,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        eval: EvalArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Tabulate an asymmetric stable density through the subordinated series
    Stable {
        #[arg(long, allow_negative_numbers = true)]
        nu: f64,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        t: f64,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        eval: EvalArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Tabulate the Cauchy law obtained when αθ = 1
    Cauchy {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        t: f64,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Draw samples from a stable subordinator or a stable law
    Sample {
        #[arg(value_enum)]
        kind: SampleKind,
        #[arg(long, allow_negative_numbers = true)]
        theta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        nu: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        sigma: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        t: f64,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run acceptance checks: airy, density, bridge, mc, pde or all
    Verify {
        suite: Suite,
        #[command(flatten)]
        out: OutArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(cli.command);
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
