//! Register layouts, statevectors, and matrix amplitude encoding.

mod encoding;
mod layout;
mod matrix;
mod state;

pub use encoding::{decode_matrix, encode_matrix, EncodedMatrix};
pub use layout::{Register, RegisterLayout, Span};
pub use matrix::ComplexMatrix;
pub use state::{tensor, QState};
