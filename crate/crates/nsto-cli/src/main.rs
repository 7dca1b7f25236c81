//! `nsto`: radial integral tables, Coulomb and Breit integrals, timing and
//! self-checks from the command line.
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod table;
mod timing;

#[derive(Debug, Parser)]
#[command(name = "nsto", version, about = "Radial repulsion integrals over non-integer Slater orbitals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Target relative accuracy for the ladder and the quadrature oracle.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Evaluation route; valid names depend on the subcommand.
    #[arg(long, global = true)]
    pub method: Option<String>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 20_240_501)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// R^L for L = 0..=l-max.
    Radial(commands::RadialArgs),
    /// 2F1(1, b; c0+L; z) by the series and by the ladder, side by side.
    HypTable(commands::HypTableArgs),
    /// Two-electron Coulomb integral over four orbitals.
    Eri(commands::EriArgs),
    /// Breit radial integrals N^L and V^L.
    Breit(commands::BreitArgs),
    /// Median timings of the series and ladder routes.
    Bench(commands::BenchArgs),
    /// Randomized identity checks; exits 0 only if all pass.
    Verify(commands::VerifyArgs),
}

/// Exit status plus the message printed on stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub msg: String,
}

impl Failure {
    pub fn bad_args(msg: impl Into<String>) -> Failure {
        Failure { code: 2, msg: msg.into() }
    }

    pub fn numerical(msg: impl Into<String>) -> Failure {
        Failure { code: 1, msg: msg.into() }
    }
}

impl From<nsto::Error> for Failure {
    fn from(e: nsto::Error) -> Failure {
        match e {
            nsto::Error::Domain(_) => Failure::bad_args(e.to_string()),
            _ => Failure::numerical(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::numerical(format!("output: {e}"))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = commands::config(&cli.common)?;
    let outcome = match &cli.command {
        Command::Radial(a) => commands::radial(a, &cli.common, &cfg),
        Command::HypTable(a) => commands::hyp_table(a, &cli.common, &cfg),
        Command::Eri(a) => commands::eri(a, &cli.common, &cfg),
        Command::Breit(a) => commands::breit(a, &cli.common, &cfg),
        Command::Bench(a) => commands::bench(a, &cli.common, &cfg),
        Command::Verify(a) => commands::verify(a, &cli.common, &cfg),
    }?;
    let mut sink: Box<dyn Write> = match &cli.common.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    outcome.table.write(cli.common.format, &mut sink)?;
    sink.flush()?;
    match outcome.failure {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("nsto: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
