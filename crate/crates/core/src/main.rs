use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use covpart::cli::{self, BenchConfig, CheckMethod, Outcome, DEFAULT_ORACLE_BOUND};

#[derive(Parser)]
#[command(
    name = "covpart",
    version,
    about = "Do the neighborhoods of a covering form a partition?"
)]
struct Args {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one covering file. Exit 0 partition, 1 not, 3 inconclusive, 2 bad input.
    Check {
        path: PathBuf,
        /// auto, excluded, oracle, reduct or uniform.
        #[arg(long, default_value = "auto")]
        method: CheckMethod,
        /// Largest universe for which `auto` also runs the oracle.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        oracle_bound: usize,
    },
    /// Print neighborhoods, reduct, degree tables and every verdict.
    Report {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check every characterization against the oracle.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time the decision routes on random coverings; CSV on stdout.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "16,64,256")]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "8,32")]
        m: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0,0.1,0.5")]
        density: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
    },
    /// Write a random covering in canonical form.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.2)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(args: Args) -> Outcome {
    match args.command {
        Command::Check {
            path,
            method,
            oracle_bound,
        } => cli::check_file(&path, method, oracle_bound),
        Command::Report { path, json } => cli::report_file(&path, json),
        Command::Verify {
            max_n,
            samples,
            seed,
        } => cli::verify(max_n, samples, seed),
        Command::Bench {
            n,
            m,
            density,
            seed,
            repetitions,
        } => cli::bench(&BenchConfig {
            sizes: n,
            block_counts: m,
            densities: density,
            seed,
            repetitions,
        }),
        Command::Gen {
            n,
            m,
            density,
            seed,
            out,
        } => cli::gen(n, m, density, seed, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(threads) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(cli::EXIT_INPUT_ERROR as u8);
        }
    }
    let outcome = run(args);
    // a closed stdout (e.g. piped into `head`) is not an error worth reporting
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
