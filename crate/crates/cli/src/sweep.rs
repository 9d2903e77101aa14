//! Gate-count tables over a range of register widths.

use qmatrix_core::algorithms::Simulator;
use qmatrix_core::{Complex64, ComplexMatrix, Error, GateStats, Operation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Algorithm, CliError};

/// Random draws per size used to confirm the counts ignore matrix content.
pub const DRAWS: usize = 3;

pub const CSV_HEADER: &str =
    "n,m,pattern_controlled_x_count,total_control_qubits,cswap_count,swap_count,depth_layers";

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub m: usize,
    pub stats: GateStats,
}

impl SweepRow {
    pub fn csv(&self) -> String {
        let s = &self.stats;
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.m,
            s.pattern_controlled_x_count,
            s.total_control_qubits,
            s.cswap_count,
            s.swap_count,
            s.depth_layers
        )
    }
}

/// Sizes are `n + m` for the Hadamard product (every split is emitted) and
/// the column width `m` otherwise, with one-qubit partners: `n = 1`, and for
/// the Kronecker product a `2^m x 2` right factor.
pub fn stats_sweep(
    sim: &Simulator,
    algorithm: Algorithm,
    min: usize,
    max: usize,
    seed: u64,
) -> Result<Vec<SweepRow>, CliError> {
    let floor = if algorithm == Algorithm::Hadamard {
        2
    } else {
        1
    };
    if min < floor || min > max {
        return Err(CliError::validation(format!(
            "size range {min}..={max} invalid for {}, sizes start at {floor}",
            algorithm.label()
        )));
    }
    // fail before simulating the smaller sizes
    let required = shapes(algorithm, max)
        .into_iter()
        .map(|(n, m)| qubits_required(algorithm, n, m))
        .max()
        .unwrap_or(0);
    if required > sim.max_qubits {
        return Err(Error::QubitCapExceeded {
            required,
            cap: sim.max_qubits,
        }
        .into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for size in min..=max {
        for (n, m) in shapes(algorithm, size) {
            let mut first: Option<GateStats> = None;
            for _ in 0..DRAWS {
                let stats = sim.run(&random_operation(&mut rng, algorithm, n, m))?.stats;
                match &first {
                    None => first = Some(stats),
                    Some(f) if *f != stats => {
                        return Err(CliError::new(
                            1,
                            format!(
                                "{} stats depend on the input at n={n} m={m}",
                                algorithm.label()
                            ),
                        ))
                    }
                    Some(_) => {}
                }
            }
            rows.push(SweepRow {
                n,
                m,
                stats: first.expect("DRAWS > 0"),
            });
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv());
        out.push('\n');
    }
    out
}

fn shapes(algorithm: Algorithm, size: usize) -> Vec<(usize, usize)> {
    match algorithm {
        Algorithm::Hadamard => (1..size).map(|n| (n, size - n)).collect(),
        _ => vec![(1, size)],
    }
}

fn qubits_required(algorithm: Algorithm, n: usize, m: usize) -> usize {
    match algorithm {
        Algorithm::Hadamard => 3 * (n + m) + 2,
        Algorithm::Kron => n + 2 * m + 1,
        Algorithm::ColAdd => n + 2 * m + 4,
        Algorithm::ColSwap => n + 3 * m + 5,
    }
}

fn random_operation(rng: &mut ChaCha8Rng, algorithm: Algorithm, n: usize, m: usize) -> Operation {
    let a = random_matrix(rng, 1 << n, 1 << m);
    match algorithm {
        Algorithm::Hadamard => Operation::Hadamard {
            a,
            b: random_matrix(rng, 1 << n, 1 << m),
        },
        Algorithm::Kron => Operation::Kronecker {
            a,
            b: random_matrix(rng, 1 << m, 2),
            general: false,
        },
        Algorithm::ColAdd => Operation::ColumnAdd { a, k: 0, l: 1 },
        Algorithm::ColSwap => Operation::ColumnSwap { a, k: 0, l: 1 },
    }
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    let entries = (0..rows * cols)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    ComplexMatrix::new(rows, cols, entries).expect("positive shape")
}
