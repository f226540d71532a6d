//! `rabi`: scenario runs, figure presets, verification suites, and sweeps.

mod config;
mod output;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rabi_core::checks::{self, CheckOptions, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "rabi",
    version,
    about = "Vacuum dynamics of a two-level atom in a single-mode cavity, with and without the rotating-wave approximation",
    after_help = "Frequencies are in units of g (g = 1 unless --g is given). \
                  Set RABI_LOG=info for progress diagnostics. Exit codes: 0 success, \
                  1 runtime or check failure, 2 usage error."
)]
struct Cli {
    /// Reserved: every computation here is deterministic and seed-free.
    /// Setting the flag is rejected so scripts cannot silently rely on it.
    #[arg(long = "seed-free", global = true)]
    seed_free: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one scenario with the selected engines on a shared grid.
    Simulate(SimulateArgs),
    /// Run a built-in preset (1-5); figure 4 writes two files, one per detuning.
    Figure(FigureArgs),
    /// Run a verification suite and print one line per check.
    Check(CheckArgs),
    /// Sweep detuning and coupling ratios, writing one summary row each.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// Atomic transition frequency (units of g).
    #[arg(long)]
    omega0: Option<f64>,
    /// Cavity frequency (units of g); give exactly one of --omega / --delta.
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<f64>,
    /// Detuning omega0 - omega (units of g).
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    /// Coupling strength; defaults to 1 (frequencies are in units of g).
    #[arg(long, allow_hyphen_values = true)]
    g: Option<f64>,
    /// excited | ground | custom:RHO_EE,RE_COH,IM_COH
    #[arg(long)]
    init: Option<String>,
    /// Simulation span (units of 1/g).
    #[arg(long, allow_hyphen_values = true)]
    tmax: Option<f64>,
    /// Integration and output step; defaults to 1/400 of the fastest period.
    #[arg(long)]
    dt: Option<f64>,
    /// Comma-separated subset of factored,direct,jc,oracle.
    #[arg(long)]
    engines: Option<String>,
    /// Fock truncation for the oracle engine.
    #[arg(long)]
    nmax: Option<usize>,
    /// csv | json
    #[arg(long)]
    format: Option<String>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value file supplying defaults for any of the flags above.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// Preset number, 1-5.
    number: u8,
    /// Output path; defaults to figure<N>.<ext> in the working directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv | json
    #[arg(long)]
    format: Option<String>,
    /// Override the default integration step.
    #[arg(long)]
    dt: Option<f64>,
    /// Fock truncation for the oracle engine.
    #[arg(long)]
    nmax: Option<usize>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// invariants | oracle | all
    suite: Suite,
    /// Fock truncation used by the oracle-side checks.
    #[arg(long)]
    nmax: Option<usize>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Comma-separated detuning ratios delta/omega0.
    #[arg(long, default_value = "0,0.1,0.2,0.5", allow_hyphen_values = true)]
    delta_ratios: String,
    /// Comma-separated coupling ratios g/omega0.
    #[arg(long, default_value = "0.02,0.05,0.1")]
    coupling_ratios: String,
    /// excited | ground
    #[arg(long, default_value = "excited")]
    init: String,
    /// Span of each run in units of 1/g.
    #[arg(long, default_value_t = 6.0)]
    gt_max: f64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failures that decide the exit code.
pub enum CliError {
    /// Bad flags or config: exit 2.
    Usage(String),
    /// A run or check failed: exit 1.
    Runtime(String),
}

impl From<rabi_core::RabiError> for CliError {
    fn from(e: rabi_core::RabiError) -> Self {
        CliError::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("RABI_LOG")).init();
    let cli = Cli::parse();
    if cli.seed_free {
        eprintln!(
            "error: --seed-free is reserved; no randomness exists to disable (remove the flag)"
        );
        return ExitCode::from(2);
    }
    let outcome = match cli.command {
        Command::Simulate(args) => run::simulate(args),
        Command::Figure(args) => run::figure(args),
        Command::Check(args) => run_check(args),
        Command::Sweep(args) => run::sweep(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run_check(args: CheckArgs) -> Result<(), CliError> {
    let opts = CheckOptions {
        n_max: args.nmax.unwrap_or(CheckOptions::default().n_max),
    };
    if opts.n_max == 0 {
        return Err(CliError::Usage("--nmax: must be at least 1".into()));
    }
    let results = checks::run_suite(args.suite, &opts);
    let mut all_passed = true;
    for r in &results {
        println!("{}", r.line());
        all_passed &= r.passed;
    }
    if all_passed {
        println!("{} checks passed", results.len());
        Ok(())
    } else {
        Err(CliError::Runtime(format!(
            "{} of {} checks failed",
            results.iter().filter(|r| !r.passed).count(),
            results.len()
        )))
    }
}
