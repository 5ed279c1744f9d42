use thiserror::Error;

/// Errors surfaced by data-dependent operations.
///
/// Contract violations (out-of-range reflection indices, malformed
/// internal state) panic instead; these variants are for inputs a caller
/// cannot always pre-validate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("not a semistandard tableau: {0}")]
    InvalidTableau(String),

    #[error("inconsistent insertion/recording pair: {0}")]
    InconsistentPair(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("crystal would exceed {limit} vertices")]
    CrystalTooLarge { limit: usize },

    #[error("matrix not supported on the requested shape at ({row}, {col})")]
    UnsupportedEntry { row: usize, col: usize },
}
