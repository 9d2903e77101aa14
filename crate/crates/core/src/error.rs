use alloc::string::String;

/// Errors raised by state construction, gates, and the algorithm pipelines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix has no nonzero entry, cannot normalize")]
    ZeroMatrix,
    #[error("dimensions {rows}x{cols} are not of the form 2^n x 2^m with n, m >= 1")]
    NonPowerOfTwo { rows: usize, cols: usize },
    #[error("expected {expected} entries, got {actual}")]
    EntryCount { expected: usize, actual: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{context} not in a single basis state (stray mass {mass:e})")]
    ResidualEntanglement { context: String, mass: f64 },
    #[error("register name `{0}` is already in use")]
    DuplicateRegisterName(String),
    #[error("register `{0}` does not exist")]
    UnknownRegister(String),
    #[error("value {value} does not fit in {width} qubit(s)")]
    ValueOutOfRange { value: u64, width: usize },
    #[error("qubit index {index} out of range for register `{register}` of width {width}")]
    QubitOutOfRange {
        register: String,
        index: usize,
        width: usize,
    },
    #[error("register width must be at least 1")]
    ZeroWidth,
    #[error("registers `{a}` ({wa} qubits) and `{b}` ({wb} qubits) differ in width")]
    WidthMismatch {
        a: String,
        wa: usize,
        b: String,
        wb: usize,
    },
    #[error("operands overlap on register `{0}`")]
    OverlappingSupport(String),
    #[error("post-selection probability {probability:e} is zero")]
    PostSelectionImpossible { probability: f64 },
    #[error("column index {index} out of range for {cols} columns")]
    ColumnIndexOutOfRange { index: usize, cols: usize },
    #[error("column indices must differ (k = l = {0})")]
    EqualColumns(usize),
    #[error("{required} qubits requested, cap is {cap}")]
    QubitCapExceeded { required: usize, cap: usize },
    #[error("amplitude vector has norm {norm}, expected 1")]
    NotNormalized { norm: f64 },
    #[error("registers `{first}` and `{second}` are not adjacent")]
    NotAdjacent { first: String, second: String },
}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
