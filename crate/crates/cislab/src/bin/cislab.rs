//! Thin command-line front-end over `cislab::jobs`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cislab::jobs::{run, Command, JobSpec};
use cislab::ErrorClass;

#[derive(Parser)]
#[command(
    name = "cislab",
    version,
    about = "Admissible shifts for complete interpolation sets"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
    /// Worker threads for grid/section fan-out (0 = library default)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// JSON report path
    #[arg(long)]
    output: PathBuf,
    /// Optional CSV plot-data path
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Validate a transversal set and compute its admissible-shift region
    TransversalAnalyze {
        /// JSON file with {"intervals": [{"lo": "p/q", "hi": "p/q", ...}]}
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Winding number of the symbol curve at one shift, three ways
    Winding {
        #[arg(long)]
        input: PathBuf,
        /// Shift, rational like 1/4 or decimal like 0.25
        #[arg(long)]
        alpha: String,
        /// Samples per curve piece in the CSV emitter
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Classify a shifted spline lattice as complete interpolation or not
    SplineCis {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Coefficients of the exponential-spline polynomial G_m(., beta)
    Gm {
        #[arg(long)]
        m: u32,
        /// Rational like 1/3 for exact coefficients, decimal for floating
        #[arg(long)]
        beta: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Unit-circle zero split of G_m(., beta)
    Zeros {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        beta: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Minimum of the doubly infinite Lerch sum over a frequency grid
    LerchScan {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Singular values of Toeplitz finite sections of the spline symbol
    ToeplitzSweep {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        alpha: f64,
        /// Comma-separated section sizes
        #[arg(long, value_delimiter = ',', default_value = "16,32,64")]
        sections: Vec<usize>,
        #[arg(long, default_value_t = 1024)]
        grid: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Truncated sampling-reconstruction experiment
    Reconstruct {
        /// Spline order (mutually exclusive with --input)
        #[arg(long)]
        m: Option<u32>,
        /// Transversal-set JSON (mutually exclusive with --m)
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_delimiter = ',', default_value = "32,64,128")]
        sections: Vec<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn to_spec(cli: Cli) -> JobSpec {
    let jobs = cli.jobs;
    let (command, out) = match cli.command {
        CliCommand::TransversalAnalyze { input, out } => {
            (Command::TransversalAnalyze { input }, out)
        }
        CliCommand::Winding {
            input,
            alpha,
            samples,
            out,
        } => (
            Command::Winding {
                input,
                alpha,
                samples,
            },
            out,
        ),
        CliCommand::SplineCis { m, alpha, out } => (Command::SplineCis { m, alpha }, out),
        CliCommand::Gm { m, beta, out } => (Command::Gm { m, beta }, out),
        CliCommand::Zeros { m, beta, out } => (Command::Zeros { m, beta }, out),
        CliCommand::LerchScan { m, grid, out } => (Command::LerchScan { m, grid }, out),
        CliCommand::ToeplitzSweep {
            m,
            alpha,
            sections,
            grid,
            out,
        } => (
            Command::ToeplitzSweep {
                m,
                alpha,
                sections,
                grid,
            },
            out,
        ),
        CliCommand::Reconstruct {
            m,
            input,
            alpha,
            sections,
            seed,
            out,
        } => (
            Command::Reconstruct {
                generator_m: m,
                input,
                alpha,
                sections,
                seed,
            },
            out,
        ),
    };
    JobSpec {
        command,
        output: out.output,
        csv: out.csv,
        jobs,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let spec = to_spec(cli);
    match run(&spec) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e.class() {
                ErrorClass::Validation => ExitCode::from(2),
                ErrorClass::Numerical => ExitCode::from(3),
            }
        }
    }
}
