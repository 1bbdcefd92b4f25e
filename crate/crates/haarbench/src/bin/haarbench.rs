//! Thin CLI over [`haarbench::experiment`]: parse flags, merge them with an
//! optional config file and the `HAARBENCH_SEED` environment fallback, run,
//! report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use haarbench::experiment::{
    Command, ConfigFile, ExperimentSpec, OutputFormat, ReferenceKind, SpecOverrides,
};

#[derive(Parser)]
#[command(
    name = "haarbench",
    version,
    about = "Fidelity/entanglement statistics of Haar-random bipartite states and DQC noise benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Emit (entropy, fidelity) pairs of Haar-random states against a fixed reference.
    Scatter {
        #[command(flatten)]
        shared: SharedArgs,
        /// Reference state kind.
        #[arg(long, value_parser = parse_reference)]
        reference: Option<ReferenceKind>,
    },
    /// Emit mean fidelity per entanglement-entropy window.
    AvgFid {
        #[command(flatten)]
        shared: SharedArgs,
        /// Reference state kind.
        #[arg(long, value_parser = parse_reference)]
        reference: Option<ReferenceKind>,
        /// Entropy window width (default 0.02).
        #[arg(long)]
        window_width: Option<f64>,
    },
    /// Emit a closed-form fidelity PDF on a uniform grid.
    PdfTable {
        #[command(flatten)]
        shared: SharedArgs,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Sweep the noisy DQC device and emit JS divergence per error rate.
    Benchmark {
        #[command(flatten)]
        shared: SharedArgs,
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated error probabilities (default 0,0.05,…,0.3).
        #[arg(long, value_delimiter = ',')]
        eps_grid: Option<Vec<f64>>,
        /// Histogram bin count (default 50).
        #[arg(long)]
        bins: Option<usize>,
    },
}

#[derive(Args)]
struct SharedArgs {
    /// Local dimension d of each subsystem (default 2).
    #[arg(long)]
    dim: Option<usize>,
    /// Number of Monte Carlo samples.
    #[arg(long)]
    samples: Option<usize>,
    /// RNG seed (falls back to HAARBENCH_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Output file path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_parser = parse_format)]
    format: Option<OutputFormat>,
    /// Flat key = value config file; flags win over its entries.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    /// Schmidt parameter γ of the two-qubit input ensemble.
    #[arg(long, conflicts_with = "maxent")]
    gamma: Option<f64>,
    /// Use the maximally entangled input ensemble at --dim (default).
    #[arg(long)]
    maxent: bool,
}

fn parse_reference(s: &str) -> Result<ReferenceKind, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> haarbench::Result<()> {
    let (command, shared, overrides) = match cli.command {
        CliCommand::Scatter { shared, reference } => {
            let overrides = SpecOverrides {
                reference,
                ..Default::default()
            };
            (Command::Scatter, shared, overrides)
        }
        CliCommand::AvgFid {
            shared,
            reference,
            window_width,
        } => {
            let overrides = SpecOverrides {
                reference,
                window_width,
                ..Default::default()
            };
            (Command::AvgFid, shared, overrides)
        }
        CliCommand::PdfTable { shared, input } => {
            let overrides = SpecOverrides {
                gamma: input.gamma,
                maxent: input.maxent,
                ..Default::default()
            };
            (Command::PdfTable, shared, overrides)
        }
        CliCommand::Benchmark {
            shared,
            input,
            eps_grid,
            bins,
        } => {
            let overrides = SpecOverrides {
                gamma: input.gamma,
                maxent: input.maxent,
                eps_grid,
                bins,
                ..Default::default()
            };
            (Command::Benchmark, shared, overrides)
        }
    };

    let overrides = SpecOverrides {
        dim: shared.dim,
        samples: shared.samples,
        seed: shared.seed,
        out: shared.out,
        format: shared.format,
        ..overrides
    };

    let config = match &shared.config {
        Some(path) => Some(ConfigFile::load(path)?),
        None => None,
    };
    let env_seed = std::env::var("HAARBENCH_SEED")
        .ok()
        .map(|raw| {
            raw.parse::<u64>().map_err(|_| {
                haarbench::Error::InvalidConfig(format!("HAARBENCH_SEED = `{raw}` is not a u64"))
            })
        })
        .transpose()?;

    let spec = ExperimentSpec::resolve(command, overrides, config.as_ref(), env_seed)?;
    let report = spec.run()?;
    println!(
        "{}: wrote {} rows to {}",
        spec.command.name(),
        report.rows_written,
        report.out.display()
    );
    Ok(())
}
