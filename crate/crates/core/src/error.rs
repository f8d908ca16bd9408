use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("generator mode must be nonzero")]
    ZeroMode,
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("pairing matrix must be square: row {row} has {len} entries, expected {dim}")]
    NonSquarePairing { row: usize, len: usize, dim: usize },
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
}
