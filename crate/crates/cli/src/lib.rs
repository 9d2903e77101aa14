//! Command-line front end for `qmatrix-core`: matrix files in, JSON reports
//! and gate-count tables out.

pub mod format;
pub mod report;
pub mod sweep;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use qmatrix_core::algorithms::Simulator;
use qmatrix_core::{oracle, ComplexMatrix, Error, Operation};

pub use report::{Report, Sampling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    Hadamard,
    Kron,
    ColAdd,
    ColSwap,
}

impl Algorithm {
    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Hadamard => "hadamard",
            Algorithm::Kron => "kron",
            Algorithm::ColAdd => "col-add",
            Algorithm::ColSwap => "col-swap",
        }
    }

    fn arity(self) -> usize {
        match self {
            Algorithm::Hadamard | Algorithm::Kron => 2,
            Algorithm::ColAdd | Algorithm::ColSwap => 1,
        }
    }

    fn takes_columns(self) -> bool {
        matches!(self, Algorithm::ColAdd | Algorithm::ColSwap)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Run(Algorithm),
    Verify(Algorithm),
    StatsSweep {
        algorithm: Algorithm,
        min: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub inputs: Vec<PathBuf>,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub trace: bool,
    pub stats: bool,
    pub sample: Option<u64>,
    pub seed: u64,
    pub general: bool,
    pub out: Option<PathBuf>,
    pub max_qubits: usize,
}

impl RunConfig {
    pub fn new(command: Command, inputs: Vec<PathBuf>) -> Self {
        RunConfig {
            command,
            inputs,
            k: None,
            l: None,
            trace: false,
            stats: false,
            sample: None,
            seed: 0,
            general: false,
            out: None,
            max_qubits: qmatrix_core::DEFAULT_MAX_QUBITS,
        }
    }
}

/// A failure with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Self::new(2, message)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PostSelectionImpossible { .. } => 3,
            Error::QubitCapExceeded { .. } => 4,
            _ => 2,
        };
        CliError::new(code, e.to_string())
    }
}

/// Runs one command, writing the report to `--out` or `stdout` and
/// diagnostics to `stderr`. Returns the process exit code.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(config, stderr) {
        Ok((body, code)) => match emit(config, &body, stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                e.code
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code
        }
    }
}

fn emit(config: &RunConfig, body: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &config.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::validation(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|e| CliError::new(1, e.to_string())),
    }
}

fn execute(config: &RunConfig, stderr: &mut dyn Write) -> Result<(String, i32), CliError> {
    let sim = Simulator::with_max_qubits(config.max_qubits);
    match config.command {
        Command::StatsSweep {
            algorithm,
            min,
            max,
        } => {
            let rows = sweep::stats_sweep(&sim, algorithm, min, max, config.seed)?;
            Ok((sweep::to_csv(&rows), 0))
        }
        Command::Run(algorithm) => {
            let op = operation(config, algorithm)?;
            let result = sim.run(&op)?;
            if config.stats {
                let _ = writeln!(
                    stderr,
                    "{}",
                    serde_json::to_string(&result.stats).expect("stats serialize")
                );
            }
            let sampling = config
                .sample
                .map(|shots| Sampling::draw(result.success_probability, shots, config.seed));
            let report = Report::new(algorithm, &result, config.trace, sampling)?;
            Ok((report.to_json_string(), 0))
        }
        Command::Verify(algorithm) => {
            let op = operation(config, algorithm)?;
            let (result, report) = oracle::verify(&sim, &op)?;
            if config.stats {
                let _ = writeln!(
                    stderr,
                    "{}",
                    serde_json::to_string(&result.stats).expect("stats serialize")
                );
            }
            let passed = report.passed();
            let body = report::verify_json(algorithm, &report);
            Ok((body, if passed { 0 } else { 1 }))
        }
    }
}

fn operation(config: &RunConfig, algorithm: Algorithm) -> Result<Operation, CliError> {
    if config.inputs.len() != algorithm.arity() {
        return Err(CliError::validation(format!(
            "{} takes {} input file(s), got {}",
            algorithm.label(),
            algorithm.arity(),
            config.inputs.len()
        )));
    }
    let columns = match (algorithm.takes_columns(), config.k, config.l) {
        (true, Some(k), Some(l)) => Some((k, l)),
        (true, _, _) => {
            return Err(CliError::validation(format!(
                "{} requires --k and --l",
                algorithm.label()
            )))
        }
        (false, None, None) => None,
        (false, _, _) => {
            return Err(CliError::validation(
                "--k/--l only apply to col-add and col-swap",
            ))
        }
    };
    if config.general && algorithm != Algorithm::Kron {
        return Err(CliError::validation("--general only applies to kron"));
    }
    let mut matrices: Vec<ComplexMatrix> = config
        .inputs
        .iter()
        .map(|p| format::read_matrix(p))
        .collect::<Result<_, _>>()?;
    let a = matrices.remove(0);
    Ok(match (algorithm, columns) {
        (Algorithm::Hadamard, _) => Operation::Hadamard {
            a,
            b: matrices.remove(0),
        },
        (Algorithm::Kron, _) => Operation::Kronecker {
            a,
            b: matrices.remove(0),
            general: config.general,
        },
        (Algorithm::ColAdd, Some((k, l))) => Operation::ColumnAdd { a, k, l },
        (Algorithm::ColSwap, Some((k, l))) => Operation::ColumnSwap { a, k, l },
        _ => unreachable!("column indices checked above"),
    })
}
