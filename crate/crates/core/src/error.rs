use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("no {k}-dimensional subspaces exist in dimension {n}")]
    InvalidSubspaceDimension { n: usize, k: usize },

    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("structure constants violate the Lie axioms: {0}")]
    AxiomViolation(String),

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("subspace is not an ideal of the given subalgebra")]
    NotIdeal,

    #[error("idempotent is central, so its grading is degenerate")]
    CentralIdempotent,

    #[error("element is not an idempotent")]
    NotIdempotent,

    #[error("algebra has a nontrivial center")]
    NontrivialCenter,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not an automorphism")]
    NotAutomorphism,

    #[error("search budget of {limit} work units exhausted")]
    BudgetExceeded { limit: u64 },

    #[error("orbit storage limit of {limit} subspaces exceeded")]
    StorageExceeded { limit: usize },

    #[error("computation interrupted")]
    Interrupted,

    #[error("more than {limit} submodules")]
    TooManySubmodules { limit: usize },

    #[error("search space of 2^{dim} vectors exceeds the configured bound")]
    SearchTooLarge { dim: usize },

    #[error("unknown catalog id `{0}`")]
    UnknownId(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

impl Error {
    /// True for errors that mean "ran out of budget" rather than "bad input".
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::StorageExceeded { .. } | Error::Interrupted
        )
    }
}
