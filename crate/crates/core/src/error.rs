use thiserror::Error;

/// Broad classes of failure, used by the CLI and the C ABI to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inconsistent input data.
    Input,
    /// A call was made whose documented precondition does not hold.
    Precondition,
    /// A library invariant (a proven mathematical consequence) was observed to fail.
    Invariant,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{sex} inheritance row ({i},{j}) sums to {sum}, expected 1")]
    Stochasticity { sex: &'static str, i: usize, j: usize, sum: String },

    #[error("negative {sex} inheritance coefficient at ({i},{j},{k}): {value}")]
    NegativeEntry { sex: &'static str, i: usize, j: usize, k: usize, value: String },

    #[error("tensor shape: {0}")]
    TensorShape(String),

    #[error("structure constants are not symmetric at ({a},{b},{d})")]
    NotCommutative { a: usize, b: usize, d: usize },

    #[error("operation requires an evolution algebra of a bisexual population")]
    NotEabp,

    #[error("operation requires a strict (nonnegative) inheritance tensor")]
    PermissiveTensor,

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("ideal has codimension {found}, expected 2")]
    Codimension { found: usize },

    #[error("pair of forms is not a bq-homomorphism")]
    NotBq,

    #[error("bq-homomorphism is zero in at least one component")]
    ZeroPair,

    #[error("map to the sex differentiation algebra has rank {rank}, not onto")]
    NotOnto { rank: usize },

    #[error("algebra is not conservative for the given form")]
    NotConservative,

    #[error("linear operator does not induce the algebra multiplication")]
    NotInduced,

    #[error("unsupported identity: {0}")]
    UnsupportedIdentity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),

    #[error("input: {0}")]
    Input(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Stochasticity { .. }
            | Error::NegativeEntry { .. }
            | Error::TensorShape(_)
            | Error::NotCommutative { .. }
            | Error::InvalidState(_)
            | Error::UnsupportedIdentity(_)
            | Error::Input(_) => ErrorKind::Input,
            Error::InvariantBreach(_) => ErrorKind::Invariant,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
