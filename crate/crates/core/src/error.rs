use thiserror::Error;

/// Everything that can go wrong outside of plain arithmetic.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects live in polynomial rings with different variable counts.
    #[error("ambient mismatch: expected {expected} variables, got {got}")]
    AmbientMismatch { expected: usize, got: usize },

    /// A tableau, diagram, or permutation does not fit the given block structure.
    #[error("block mismatch: {0}")]
    BlockMismatch(String),

    /// Structurally invalid input (bad partition, repeated entries, ...).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Exact division with a zero divisor.
    #[error("division by zero polynomial")]
    DivisionByZero,

    /// A requested computation exceeds the configured size bounds.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// Text input did not parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// A structural check came out false on a concrete instance.
    #[error("falsified [{check}] on {instance}: {detail}")]
    Falsified {
        check: String,
        instance: String,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
