use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),
    #[error("enumeration over {roots} roots needs 2^{roots} candidates, above the budget of {budget}")]
    CapExceeded { roots: usize, budget: u64 },
    #[error("root subset is not closed")]
    NotClosed,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("conjugation kind `{0}` is not supported here")]
    UnsupportedKind(String),
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("root subset is not a generalized complex subset")]
    NotGcSubset,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
