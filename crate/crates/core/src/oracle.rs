//! Classical reference implementations used to check the circuits.
//!
//! Nothing here touches a quantum state: each function works directly on
//! matrix entries, so agreement with [`crate::algorithms`] is a genuine
//! cross-check.

use num_traits::Float;

use crate::algorithms::{AlgorithmResult, Operation, Simulator};
use crate::qstate::ComplexMatrix;
use crate::{tolerance, Error, Result};

/// Entrywise product.
pub fn classical_hadamard(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "entrywise product of {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let entries = a
        .entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| x * y)
        .collect();
    ComplexMatrix::new(a.rows(), a.cols(), entries)
}

/// Block matrix `[a_ij B]`: entry `(p s1 + s2, q t1 + t2)` is `a_{s1 t1} b_{s2 t2}`
/// for `b` of shape `p x q`.
pub fn classical_kronecker(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (p, q) = (b.rows(), b.cols());
    let mut out = ComplexMatrix::zeros(a.rows() * p, a.cols() * q);
    for s1 in 0..a.rows() {
        for t1 in 0..a.cols() {
            for s2 in 0..p {
                for t2 in 0..q {
                    out[(p * s1 + s2, q * t1 + t2)] = a[(s1, t1)] * b[(s2, t2)];
                }
            }
        }
    }
    out
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

/// Column `l` becomes column `l` plus column `k`.
pub fn classical_column_add(a: &ComplexMatrix, k: usize, l: usize) -> Result<ComplexMatrix> {
    check_columns(a, k, l)?;
    let mut out = a.clone();
    for r in 0..a.rows() {
        out[(r, l)] = a[(r, l)] + a[(r, k)];
    }
    Ok(out)
}

/// Columns `k` and `l` trade places.
pub fn classical_column_swap(a: &ComplexMatrix, k: usize, l: usize) -> Result<ComplexMatrix> {
    check_columns(a, k, l)?;
    let mut out = a.clone();
    for r in 0..a.rows() {
        out[(r, k)] = a[(r, l)];
        out[(r, l)] = a[(r, k)];
    }
    Ok(out)
}

/// Divides by the Frobenius norm, returning the normalized matrix and the norm.
pub fn normalize_frobenius(a: &ComplexMatrix) -> Result<(ComplexMatrix, f64)> {
    let norm = a.frobenius_norm();
    if norm == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    let entries = a.entries().iter().map(|z| z / norm).collect();
    Ok((ComplexMatrix::new(a.rows(), a.cols(), entries)?, norm))
}

/// The classical result of `op` applied to the Frobenius-normalized inputs.
///
/// This is the unnormalized numerator of each circuit's output state: for
/// the Hadamard product its norm is `G`, for column addition `G`, and for
/// the Kronecker product and the column swap it is 1.
pub fn expected_output(op: &Operation) -> Result<ComplexMatrix> {
    match op {
        Operation::Hadamard { a, b } => {
            a.qubit_dims()?;
            classical_hadamard(&normalize_frobenius(a)?.0, &normalize_frobenius(b)?.0)
        }
        Operation::Kronecker { a, b, general } => {
            a.qubit_dims()?;
            b.qubit_dims()?;
            if !general && b.rows() != a.cols() {
                return Err(Error::DimensionMismatch(alloc::format!(
                    "rows(b) = {} but cols(a) = {}",
                    b.rows(),
                    a.cols()
                )));
            }
            Ok(classical_kronecker(
                &normalize_frobenius(a)?.0,
                &normalize_frobenius(b)?.0,
            ))
        }
        Operation::ColumnAdd { a, k, l } => {
            a.qubit_dims()?;
            classical_column_add(&normalize_frobenius(a)?.0, *k, *l)
        }
        Operation::ColumnSwap { a, k, l } => {
            a.qubit_dims()?;
            classical_column_swap(&normalize_frobenius(a)?.0, *k, *l)
        }
    }
}

/// Closed-form post-selection probability of the circuit for `op`:
/// `G^2 / 2^(n+m)`, `1`, `G^2 / 8`, and `1/24` respectively.
pub fn expected_probability(op: &Operation) -> Result<f64> {
    let expected = expected_output(op)?;
    let g2 = Float::powi(expected.frobenius_norm(), 2);
    Ok(match op {
        Operation::Hadamard { a, .. } => g2 / (a.rows() * a.cols()) as f64,
        Operation::Kronecker { .. } => 1.0,
        Operation::ColumnAdd { .. } => g2 / 8.0,
        Operation::ColumnSwap { .. } => 1.0 / 24.0,
    })
}

/// Comparison of a decoded circuit output against the classical result.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub expected: ComplexMatrix,
    /// `|expected|_F / |decoded|_F`, applied to the decoded matrix before
    /// taking differences.
    pub rescale_factor: f64,
    pub max_abs_diff: f64,
    pub probability_expected: f64,
    pub probability_observed: f64,
}

impl OracleReport {
    /// Builds the report. The circuits only use real gates, so a positive
    /// real rescale is the only freedom between the two sides.
    pub fn compare(
        decoded: &ComplexMatrix,
        expected: ComplexMatrix,
        probability_observed: f64,
        probability_expected: f64,
    ) -> Result<Self> {
        let decoded_norm = decoded.frobenius_norm();
        if decoded_norm == 0.0 {
            return Err(Error::ZeroMatrix);
        }
        let rescale_factor = expected.frobenius_norm() / decoded_norm;
        let max_abs_diff = decoded
            .scale(rescale_factor)
            .max_abs_diff(&expected)
            .ok_or_else(|| {
                Error::DimensionMismatch(alloc::format!(
                    "decoded {}x{} vs expected {}x{}",
                    decoded.rows(),
                    decoded.cols(),
                    expected.rows(),
                    expected.cols()
                ))
            })?;
        Ok(Self {
            expected,
            rescale_factor,
            max_abs_diff,
            probability_expected,
            probability_observed,
        })
    }

    pub fn probability_error(&self) -> f64 {
        (self.probability_observed - self.probability_expected).abs()
    }

    /// Matrix within [`tolerance::MATRIX`] and probability within
    /// [`tolerance::PROBABILITY`].
    pub fn passed(&self) -> bool {
        self.max_abs_diff < tolerance::MATRIX && self.probability_error() < tolerance::PROBABILITY
    }
}

/// Runs `op` through the circuit and checks it against the classical oracle.
pub fn verify(sim: &Simulator, op: &Operation) -> Result<(AlgorithmResult, OracleReport)> {
    let result = sim.run(op)?;
    let decoded = result.output.decode()?;
    let report = OracleReport::compare(
        &decoded,
        expected_output(op)?,
        result.success_probability,
        expected_probability(op)?,
    )?;
    Ok((result, report))
}
