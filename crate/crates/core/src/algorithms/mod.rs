//! End-to-end circuits for matrix operations on amplitude-encoded inputs.
//!
//! Each pipeline encodes its classical inputs, runs the circuit gate by
//! gate on a full statevector, post-selects where the circuit requires it,
//! and returns the output matrix still encoded in a state. The success
//! probability is computed exactly from the amplitudes.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::gates::GateStats;
use crate::qstate::{ComplexMatrix, EncodedMatrix, QState};
use crate::{Error, Result, DEFAULT_MAX_QUBITS};

mod column_add;
mod column_swap;
mod hadamard;
mod kronecker;

/// Snapshot of the state after one pipeline stage.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StageRecord {
    #[cfg_attr(feature = "serde", serde(rename = "stage"))]
    pub label: String,
    pub norm: f64,
    /// Probability mass on flag patterns of interest, keyed like `"B3=1"`.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub flag_mass: Option<BTreeMap<String, f64>>,
}

/// Output of a pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmResult {
    /// The result matrix. Its `scale` is chosen so that
    /// `output.matrix()` reproduces the classical result on the original,
    /// unnormalized inputs.
    pub output: EncodedMatrix,
    pub success_probability: f64,
    pub stats: GateStats,
    pub stage_trace: Vec<StageRecord>,
}

/// Names one of the four matrix operations together with its inputs.
#[derive(Debug, Clone, PartialEq)]
pub enum Operation {
    Hadamard {
        a: ComplexMatrix,
        b: ComplexMatrix,
    },
    /// `general` lifts the requirement that `b` has as many rows as `a` has
    /// columns.
    Kronecker {
        a: ComplexMatrix,
        b: ComplexMatrix,
        general: bool,
    },
    ColumnAdd {
        a: ComplexMatrix,
        k: usize,
        l: usize,
    },
    ColumnSwap {
        a: ComplexMatrix,
        k: usize,
        l: usize,
    },
}

impl Operation {
    pub fn label(&self) -> &'static str {
        match self {
            Operation::Hadamard { .. } => "hadamard",
            Operation::Kronecker { .. } => "kron",
            Operation::ColumnAdd { .. } => "col-add",
            Operation::ColumnSwap { .. } => "col-swap",
        }
    }
}

/// Runs pipelines under a qubit cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Simulator {
    pub max_qubits: usize,
}

impl Default for Simulator {
    fn default() -> Self {
        Self {
            max_qubits: DEFAULT_MAX_QUBITS,
        }
    }
}

impl Simulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_qubits(max_qubits: usize) -> Self {
        Self { max_qubits }
    }

    pub fn run(&self, op: &Operation) -> Result<AlgorithmResult> {
        match op {
            Operation::Hadamard { a, b } => self.hadamard_product(a, b),
            Operation::Kronecker {
                a,
                b,
                general: false,
            } => self.kronecker_product(a, b),
            Operation::Kronecker {
                a,
                b,
                general: true,
            } => self.kronecker_product_general(a, b),
            Operation::ColumnAdd { a, k, l } => self.column_add(a, *k, *l),
            Operation::ColumnSwap { a, k, l } => self.column_swap(a, *k, *l),
        }
    }

    /// Fails early if a pipeline would need more than `max_qubits`.
    fn reserve(&self, required: usize) -> Result<()> {
        if required > self.max_qubits {
            return Err(Error::QubitCapExceeded {
                required,
                cap: self.max_qubits,
            });
        }
        Ok(())
    }

    fn encode(&self, m: &ComplexMatrix, row: &str, col: &str) -> Result<EncodedMatrix> {
        let mut e = crate::qstate::encode_matrix(m, row, col)?;
        let layout = e.state.layout().clone().with_max_qubits(self.max_qubits)?;
        e.state = QState::from_parts(layout, e.state.amplitudes().to_vec());
        Ok(e)
    }
}

/// See [`Simulator::hadamard_product`].
pub fn hadamard_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<AlgorithmResult> {
    Simulator::default().hadamard_product(a, b)
}

/// See [`Simulator::kronecker_product`].
pub fn kronecker_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<AlgorithmResult> {
    Simulator::default().kronecker_product(a, b)
}

/// See [`Simulator::kronecker_product_general`].
pub fn kronecker_product_general(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<AlgorithmResult> {
    Simulator::default().kronecker_product_general(a, b)
}

/// See [`Simulator::column_add`].
pub fn column_add(a: &ComplexMatrix, k: usize, l: usize) -> Result<AlgorithmResult> {
    Simulator::default().column_add(a, k, l)
}

/// See [`Simulator::column_swap`].
pub fn column_swap(a: &ComplexMatrix, k: usize, l: usize) -> Result<AlgorithmResult> {
    Simulator::default().column_swap(a, k, l)
}

/// Runs `op` with the default qubit cap.
pub fn run(op: &Operation) -> Result<AlgorithmResult> {
    Simulator::default().run(op)
}

#[derive(Default)]
struct Trace {
    records: Vec<StageRecord>,
}

impl Trace {
    fn record(&mut self, label: &str, state: &QState) {
        self.records.push(StageRecord {
            label: label.to_string(),
            norm: state.norm(),
            flag_mass: None,
        });
    }

    /// Records the mass on each `(key, pattern)` pair.
    fn record_masses(
        &mut self,
        label: &str,
        state: &QState,
        patterns: &[(&str, &[(&str, u64)])],
    ) -> Result<()> {
        let mut masses = BTreeMap::new();
        for (key, pattern) in patterns {
            masses.insert(key.to_string(), state.mass_where(pattern)?);
        }
        self.records.push(StageRecord {
            label: label.to_string(),
            norm: state.norm(),
            flag_mass: Some(masses),
        });
        Ok(())
    }
}

fn check_columns(a: &ComplexMatrix, k: usize, l: usize) -> Result<()> {
    for index in [k, l] {
        if index >= a.cols() {
            return Err(Error::ColumnIndexOutOfRange {
                index,
                cols: a.cols(),
            });
        }
    }
    if k == l {
        return Err(Error::EqualColumns(k));
    }
    Ok(())
}
