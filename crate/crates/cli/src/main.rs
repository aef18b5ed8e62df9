mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rlelz::synth::RunDist;

/// Lempel-Ziv s-factorization through run-length encoding.
#[derive(Parser, Debug)]
#[command(name = "rlelz", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the run-length encoding of a file, one `<byte>\t<count>` per run.
    Encode { input: PathBuf },
    /// Rebuild the raw bytes from the encoding printed by `encode`.
    Decode { input: PathBuf },
    /// Factorize a file and print the factors.
    Factorize {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Offline)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Lengths)]
        format: Format,
        /// Allow the naive mode above its size cap.
        #[arg(long)]
        force_naive: bool,
    },
    /// Run every applicable mode, compare them and check every reference.
    Verify {
        input: PathBuf,
        #[arg(long)]
        force_naive: bool,
    },
    /// Normalized compression distance between two files.
    Ncd { a: PathBuf, b: PathBuf },
    /// Time both fast modes on synthetic strings and print CSV.
    Bench {
        /// Decoded lengths, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u16).range(1..=256))]
        sigma: u16,
        /// `geometric:<rho>` or `uniform:<max>`.
        #[arg(long, default_value = "geometric:0.5")]
        run_dist: RunDist,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Offline,
    Online,
    Naive,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Lengths,
    Pairs,
    Json,
}

/// Failures, each with its own exit status.
#[derive(Debug)]
enum CliError {
    Verify(String),
    Usage(String),
    Io(anyhow::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Encode { input } => commands::encode(&input),
        Command::Decode { input } => commands::decode(&input),
        Command::Factorize { input, mode, format, force_naive } => {
            commands::factorize(&input, mode, format, force_naive)
        }
        Command::Verify { input, force_naive } => commands::verify(&input, force_naive),
        Command::Ncd { a, b } => commands::ncd(&a, &b),
        Command::Bench { sizes, sigma, run_dist, seed } => commands::bench(&sizes, usize::from(sigma), run_dist, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Verify(msg) | CliError::Usage(msg) => eprintln!("rlelz: {msg}"),
                CliError::Io(err) => eprintln!("rlelz: {err:#}"),
            }
            ExitCode::from(e.code())
        }
    }
}
