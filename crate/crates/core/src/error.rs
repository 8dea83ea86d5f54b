use thiserror::Error;

/// Errors raised by matrix construction, verification and search routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    /// The smallest singular value fell below the tolerance.
    #[error("matrix is numerically rank deficient (smallest singular value {sigma_min:e})")]
    RankDeficient { sigma_min: f64 },

    #[error("entry ({row}, {col}) has vanishing modulus")]
    ZeroEntry { row: usize, col: usize },

    #[error("matrix is not dephased")]
    NotDephased,

    #[error("matrix has vanishing Frobenius norm")]
    ZeroMatrix,

    #[error("matrix is not a complex Hadamard matrix")]
    NotHadamard,

    #[error("matrix is not unitary")]
    NotUnitary,

    #[error("matrix is not a 2-unitary permutation matrix")]
    NotTwoUnitaryPermutation,

    #[error("parameter outside its domain: {0}")]
    Domain(String),

    #[error("unknown matrix name `{0}`")]
    UnknownName(String),

    #[error("`{name}` takes {expected} parameter(s), got {found}")]
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
    },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("exponent {value} at line {line} outside [0, {q})")]
    Range { line: usize, value: i64, q: u32 },

    #[error("invalid placement: {0}")]
    BadPlacement(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(expected: impl ToString, found: impl ToString) -> Self {
        Error::ShapeMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
