//! Statevector simulation of quantum circuits that act on amplitude-encoded
//! matrices.
//!
//! A matrix `A` of size `2^n x 2^m` is stored as the pure state
//! `sum_{s,t} a_st / |A|_F |s>_R |t>_C` over a row register `R` and a column
//! register `C`. The [`algorithms`] module builds four circuits on top of
//! that encoding:
//!
//! - [`algorithms::hadamard_product`]: entrywise product of two matrices,
//!   post-selected with probability `G^2 / 2^(n+m)`.
//! - [`algorithms::kronecker_product`]: tensor product via `m` register SWAPs,
//!   deterministic.
//! - [`algorithms::column_add`]: adds column `k` to column `l`, post-selected
//!   with probability `G^2 / 8`.
//! - [`algorithms::column_swap`]: exchanges columns `k` and `l`, post-selected
//!   with probability `1/24` for every input.
//!
//! The gates they use live in [`gates`]; every gate reports [`GateStats`] so
//! the circuits' gate counts and depth can be inspected. [`oracle`] holds the
//! classical reference implementations used to check the circuits.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use qmatrix_core::{algorithms, ComplexMatrix};
//!
//! let a = ComplexMatrix::from_real(2, 2, &[1.0, 2.0, 3.0, 4.0]).unwrap();
//! let result = algorithms::column_swap(&a, 0, 1).unwrap();
//! assert!((result.success_probability - 1.0 / 24.0).abs() < 1e-12);
//! ```

#![no_std]

extern crate alloc;

pub mod algorithms;
mod error;
pub mod gates;
pub mod oracle;
pub mod qstate;

pub use algorithms::{AlgorithmResult, Operation, Simulator, StageRecord};
pub use error::{Error, Result};
pub use gates::{ControlCondition, GateStats};
pub use num_complex::Complex64;
pub use qstate::{
    decode_matrix, encode_matrix, ComplexMatrix, EncodedMatrix, QState, RegisterLayout,
};

/// Tolerances shared by the simulator and its checks.
pub mod tolerance {
    /// Allowed deviation of a state's 2-norm from 1.
    pub const NORM: f64 = 1e-10;
    /// Probability mass below which a register is considered to hold one
    /// basis value, and below which post-selection is refused.
    pub const RESIDUAL_MASS: f64 = 1e-10;
    /// Post-selection probabilities below this are treated as zero.
    pub const POSTSELECT_MIN: f64 = 1e-12;
    /// End-to-end matrix comparison after rescaling.
    pub const MATRIX: f64 = 1e-9;
    /// Observed vs closed-form post-selection probability.
    pub const PROBABILITY: f64 = 1e-10;
}

/// Default cap on the total number of simulated qubits.
pub const DEFAULT_MAX_QUBITS: usize = 24;
