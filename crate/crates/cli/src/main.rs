use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qmatrix_cli::{run, Algorithm, Command, RunConfig};

#[derive(Parser)]
#[command(
    name = "qmatrix",
    version,
    about = "Simulate quantum matrix-operation circuits on JSON matrix files"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Entrywise product of two equally shaped matrices
    Hadamard {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Kronecker product; without --general, B must have as many rows as A has columns
    Kron {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Add column k into column l
    ColAdd {
        a: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Exchange columns k and l
    ColSwap {
        a: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run an algorithm and compare it with the classical result
    Verify {
        algorithm: Algorithm,
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        opts: Opts,
    },
    /// Print gate counts as CSV over a range of sizes
    StatsSweep {
        algorithm: Algorithm,
        min: usize,
        max: usize,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    /// First column index (0-based)
    #[arg(long)]
    k: Option<usize>,
    /// Second column index (0-based)
    #[arg(long)]
    l: Option<usize>,
    /// Include per-stage norms and flag masses
    #[arg(long)]
    trace: bool,
    /// Also print gate statistics to stderr
    #[arg(long)]
    stats: bool,
    /// Simulate this many shots of the final measurement
    #[arg(long, value_name = "N")]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Allow Kronecker factors of any shape
    #[arg(long)]
    general: bool,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let (command, inputs, opts) = match cli.command {
        Cmd::Hadamard { a, b, opts } => (Command::Run(Algorithm::Hadamard), vec![a, b], opts),
        Cmd::Kron { a, b, opts } => (Command::Run(Algorithm::Kron), vec![a, b], opts),
        Cmd::ColAdd { a, opts } => (Command::Run(Algorithm::ColAdd), vec![a], opts),
        Cmd::ColSwap { a, opts } => (Command::Run(Algorithm::ColSwap), vec![a], opts),
        Cmd::Verify {
            algorithm,
            inputs,
            opts,
        } => (Command::Verify(algorithm), inputs, opts),
        Cmd::StatsSweep {
            algorithm,
            min,
            max,
            opts,
        } => (
            Command::StatsSweep {
                algorithm,
                min,
                max,
            },
            vec![],
            opts,
        ),
    };
    let config = RunConfig {
        k: opts.k,
        l: opts.l,
        trace: opts.trace,
        stats: opts.stats,
        sample: opts.sample,
        seed: opts.seed,
        general: opts.general,
        out: opts.out,
        ..RunConfig::new(command, inputs)
    };
    let code = run(
        &config,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
