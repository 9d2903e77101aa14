use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_complex::Complex64;

use super::{ComplexMatrix, QState, RegisterLayout};
use crate::{tolerance, Error, Result};

/// A state carrying a matrix in its `(row_reg, col_reg)` amplitudes.
///
/// The amplitude at `|s>_row |t>_col` is `a_st / scale`, where `scale` is
/// the Frobenius norm of the matrix `a` being represented. Other registers,
/// if present, sit in one basis state.
#[derive(Debug, Clone, PartialEq)]
pub struct EncodedMatrix {
    pub state: QState,
    pub row_reg: String,
    pub col_reg: String,
    pub scale: f64,
}

impl EncodedMatrix {
    /// The unit-norm matrix held in the amplitudes.
    pub fn decode(&self) -> Result<ComplexMatrix> {
        decode_matrix(&self.state, &self.row_reg, &self.col_reg)
    }

    /// The represented matrix, i.e. the decoded amplitudes times `scale`.
    pub fn matrix(&self) -> Result<ComplexMatrix> {
        Ok(self.decode()?.scale(self.scale))
    }
}

/// Amplitude-encodes `matrix` on a fresh `[(row_name, n), (col_name, m)]`
/// layout, dividing by its Frobenius norm.
pub fn encode_matrix(
    matrix: &ComplexMatrix,
    row_name: &str,
    col_name: &str,
) -> Result<EncodedMatrix> {
    let (n, m) = matrix.qubit_dims()?;
    let scale = matrix.frobenius_norm();
    if scale == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    let layout = RegisterLayout::new(&[(row_name, n), (col_name, m)])?;
    // row-major order coincides with index s * 2^m + t
    let amplitudes = matrix.entries().iter().map(|z| z / scale).collect();
    Ok(EncodedMatrix {
        state: QState::from_parts(layout, amplitudes),
        row_reg: row_name.to_string(),
        col_reg: col_name.to_string(),
        scale,
    })
}

/// Reads the `(row, col)` amplitudes back out as a matrix.
///
/// Every other register must hold a single basis value; the stray mass
/// outside the dominant value has to stay below
/// [`tolerance::RESIDUAL_MASS`].
pub fn decode_matrix(state: &QState, row_name: &str, col_name: &str) -> Result<ComplexMatrix> {
    let layout = state.layout();
    let row = layout.span(row_name)?;
    let col = layout.span(col_name)?;
    if row_name == col_name {
        return Err(Error::OverlappingSupport(row_name.to_string()));
    }
    let amps = state.amplitudes();
    let residual_mask = (layout.dim() - 1) & !row.mask() & !col.mask();
    let peak = amps
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm_sqr().total_cmp(&b.1.norm_sqr()))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let residual = peak & residual_mask;
    let stray: f64 = amps
        .iter()
        .enumerate()
        .filter(|(i, _)| i & residual_mask != residual)
        .map(|(_, z)| z.norm_sqr())
        .sum();
    if stray >= tolerance::RESIDUAL_MASS {
        return Err(Error::ResidualEntanglement {
            context: alloc::format!("registers other than ({row_name}, {col_name}) are"),
            mass: stray,
        });
    }
    let (rows, cols) = (1usize << row.width, 1usize << col.width);
    let entries: Vec<Complex64> = (0..rows)
        .flat_map(|s| (0..cols).map(move |t| (s, t)))
        .map(|(s, t)| amps[col.set(row.set(residual, s), t)])
        .collect();
    ComplexMatrix::new(rows, cols, entries)
}
