//! Command-line front end for the Dirac-Sidharth toolkit.
//!
//! Subcommands: `gamma verify`, `dispersion table`, `spinor build|verify`,
//! `evolve run`. Exit codes: 0 success / all checks pass, 1 verification
//! failure, 2 usage or configuration error.

// Small dense matrix kernels read better with explicit indices.
#![allow(clippy::needless_range_loop)]

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "sidharth",
    version,
    about = "Dirac-Sidharth equation toolkit: gamma algebra, modified dispersion, \
             plane-wave spinors, spectral wavepacket evolution (natural units, ħ = c = 1)"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct GlobalOpts {
    /// Write outputs to canonical files in this directory instead of stdout
    /// (evolve always writes files; its default directory is ".")
    #[arg(long, global = true)]
    pub output_dir: Option<PathBuf>,

    /// Format of verification reports (tables and spinor JSON are fixed)
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Multiply all pass/fail tolerances by this factor
    #[arg(long, global = true, default_value_t = 1.0)]
    pub tolerance_scale: f64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Gamma-matrix algebra checks
    Gamma {
        #[command(subcommand)]
        action: GammaAction,
    },
    /// Modified dispersion relation tables
    Dispersion {
        #[command(subcommand)]
        action: DispersionAction,
    },
    /// Momentum-space spinor solutions
    Spinor {
        #[command(subcommand)]
        action: SpinorAction,
    },
    /// Spinor wavepacket evolution
    Evolve {
        #[command(subcommand)]
        action: EvolveAction,
    },
}

#[derive(Subcommand)]
enum GammaAction {
    /// Run the gamma-algebra invariant suite in both representations
    Verify {
        /// Zero out one matrix before the checks (fault injection)
        #[arg(long, value_enum)]
        corrupt: Option<commands::gamma::CorruptTarget>,
    },
}

#[derive(Subcommand)]
enum DispersionAction {
    /// Emit a CSV table `p,E_plus,E_minus,v_group,E2` over a momentum grid
    Table(commands::dispersion::TableArgs),
}

#[derive(Subcommand)]
enum SpinorAction {
    /// Build one plane-wave solution and emit it as JSON
    Build(commands::spinor::BuildArgs),
    /// Run the plane-wave invariant suite over a parameter grid
    Verify(commands::spinor::VerifyArgs),
}

#[derive(Subcommand)]
enum EvolveAction {
    /// Run a configured evolution, writing observables.csv (+ snapshots)
    Run {
        /// Path to the run configuration (TOML, strict schema)
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Debug)]
pub enum CliError {
    Core(dirac_sidharth::Error),
    Io(std::io::Error),
    Config(Vec<String>),
}

impl From<dirac_sidharth::Error> for CliError {
    fn from(e: dirac_sidharth::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            // numeric failures are verification failures, everything else is
            // a usage/config problem
            CliError::Core(dirac_sidharth::Error::Numeric(_)) => 1,
            _ => 2,
        }
    }

    fn report(&self) {
        match self {
            CliError::Core(e) => eprintln!("error: {e}"),
            CliError::Io(e) => eprintln!("error: {e}"),
            CliError::Config(errors) => {
                eprintln!("error: invalid configuration ({} problem(s)):", errors.len());
                for e in errors {
                    eprintln!("  - {e}");
                }
            }
        }
    }
}

/// Write to stdout, or to `filename` under --output-dir when given.
pub fn emit(global: &GlobalOpts, filename: &str, content: &str) -> Result<(), CliError> {
    match &global.output_dir {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join(filename), content)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !(cli.global.tolerance_scale.is_finite() && cli.global.tolerance_scale > 0.0) {
        eprintln!("error: --tolerance-scale must be a positive number");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Gamma {
            action: GammaAction::Verify { corrupt },
        } => commands::gamma::verify(&cli.global, corrupt),
        Command::Dispersion {
            action: DispersionAction::Table(args),
        } => commands::dispersion::table(&cli.global, &args),
        Command::Spinor {
            action: SpinorAction::Build(args),
        } => commands::spinor::build(&cli.global, &args),
        Command::Spinor {
            action: SpinorAction::Verify(args),
        } => commands::spinor::verify(&cli.global, &args),
        Command::Evolve {
            action: EvolveAction::Run { config },
        } => commands::evolve::run(&cli.global, &config),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            e.report();
            ExitCode::from(e.exit_code())
        }
    }
}
