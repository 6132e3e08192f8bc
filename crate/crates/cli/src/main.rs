use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use strandtrace::commands::{self, ComputeArgs, SearchArgs, Suite, VerifyArgs, Via};
use strandtrace::format::parse_shape;
use strandtrace::{CliError, Format, Report};
use strandtrace_core::diagrams::SearchMode;
use strandtrace_core::Basis;

/// Chromatic symmetric functions of unit interval orders via strand diagrams.
#[derive(Parser)]
#[command(name = "strandtrace", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    P,
    H,
    E,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Expand ch(Γ_λ) for λ inside stair(n).
    Compute {
        /// Parts of λ, comma separated; empty for the empty partition.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "h")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "both")]
        via: Via,
        /// Write the reduction steps as JSON lines.
        #[arg(long)]
        step_log: Option<PathBuf>,
    },
    /// Run an identity suite and report every case.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        /// Bound for the power-sum identity cases.
        #[arg(long, default_value_t = 20)]
        max_i: usize,
    },
    /// Pattern avoidance, corners and crossings of a shape.
    Classify {
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long)]
        n: usize,
    },
    /// Look for h-negative concatenations of crossings.
    Search {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        max_crossings: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of diagrams drawn in random mode.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Also write the JSON-lines log here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    commands::configure_threads()?;
    match &cli.command {
        Command::Compute {
            lambda,
            n,
            basis,
            via,
            step_log,
        } => commands::compute(&ComputeArgs {
            shape: parse_shape(lambda, *n)?,
            basis: match basis {
                BasisArg::P => Basis::Power,
                BasisArg::H => Basis::Homogeneous,
                BasisArg::E => Basis::Elementary,
            },
            via: *via,
            step_log: step_log.clone(),
        }),
        Command::Verify {
            suite,
            max_n,
            max_k,
            max_i,
        } => commands::verify(&VerifyArgs {
            suite: *suite,
            max_n: *max_n,
            max_k: *max_k,
            max_i: *max_i,
        }),
        Command::Classify { lambda, n } => commands::classify(&parse_shape(lambda, *n)?),
        Command::Search {
            strands,
            max_crossings,
            mode,
            seed,
            samples,
            out,
        } => commands::search(&SearchArgs {
            strands: *strands,
            max_crossings: *max_crossings,
            mode: match mode {
                ModeArg::Exhaustive => SearchMode::Exhaustive,
                ModeArg::Random => SearchMode::Random {
                    seed: *seed,
                    samples: *samples,
                },
            },
            out: out.clone(),
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let rendered = report.render(cli.format, &mut stdout.lock(), &mut stderr.lock());
    if let Err(e) = rendered.and_then(|_| stdout.lock().flush()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    ExitCode::from(report.status.exit_code() as u8)
}
