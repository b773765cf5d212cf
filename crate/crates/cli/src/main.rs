use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use verma_tensor::GaussianRational;

mod commands;
mod envelope;
mod failure;
mod grid;
mod verify;

use failure::Failure;

#[derive(Parser)]
#[command(name = "verma-tensor", version, about = "Decompose tensor products of sl2 Verma modules exactly")]
struct Cli {
    /// Largest cutoff any command accepts.
    #[arg(long, global = true, default_value_t = 64)]
    max_cutoff: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form decomposition of M(mu1) ⊗ M(mu2), optionally checked by brute force.
    Decompose {
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        mu1: GaussianRational,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        mu2: GaussianRational,
        /// Deepest weight layer to build.
        #[arg(long, default_value_t = 12)]
        cutoff: usize,
        /// Classify every primary component by exact linear algebra.
        #[arg(long)]
        verify: bool,
        /// Include raising-operator and Casimir matrices of every layer.
        #[arg(long)]
        dump_matrices: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Rankin-Cohen bracket coefficients from bidegree (lam1, lam2) to degree lam3.
    Rc {
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        lam1: GaussianRational,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        lam2: GaussianRational,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        lam3: GaussianRational,
        /// Apply the bracket to two polynomials given as JSON arrays of coefficients, ascending degree.
        #[arg(long, num_args = 2, value_names = ["F", "G"])]
        apply: Option<Vec<PathBuf>>,
        #[command(flatten)]
        output: Output,
    },
    /// dim Hom(M(-lam3), M(-lam1) ⊗ M(-lam2)).
    Homdim {
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        lam1: GaussianRational,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        lam2: GaussianRational,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        lam3: GaussianRational,
        #[arg(long, default_value_t = 12)]
        cutoff: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run the agreement suites over a grid of cases.
    Verify {
        /// Grid file; the built-in integer grid is used when omitted.
        #[arg(long)]
        grid: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        cutoff: usize,
        /// Worker threads.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        parallel: u16,
        /// Print every case's outcome, not only the summary.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: Output,
    },
}

fn scalar(text: &str) -> Result<GaussianRational, String> {
    verma_tensor::parse_scalar(text).map_err(|e| e.to_string())
}

fn check_cutoff(cutoff: usize, max: usize) -> Result<(), Failure> {
    if cutoff > max {
        return Err(Failure::Input(format!("cutoff {cutoff} exceeds the maximum {max} (see --max-cutoff)")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Decompose { mu1, mu2, cutoff, verify, dump_matrices, output } => {
            check_cutoff(cutoff, cli.max_cutoff)?;
            commands::decompose(&mu1, &mu2, cutoff, verify, dump_matrices, output.json)
        }
        Command::Rc { lam1, lam2, lam3, apply, output } => {
            let files = apply.map(|v| (v[0].clone(), v[1].clone()));
            commands::rc(&lam1, &lam2, &lam3, files, output.json)
        }
        Command::Homdim { lam1, lam2, lam3, cutoff, output } => {
            check_cutoff(cutoff, cli.max_cutoff)?;
            commands::homdim(&lam1, &lam2, &lam3, cutoff, output.json)
        }
        Command::Verify { grid, cutoff, parallel, list, output } => {
            check_cutoff(cutoff, cli.max_cutoff)?;
            verify::run(grid.as_deref(), cutoff, usize::from(parallel), list, output.json)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
