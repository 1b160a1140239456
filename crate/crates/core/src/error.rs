use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps [`Error::Parse`] to exit code 2, [`Error::BudgetExceeded`] to
/// exit code 3 and everything else to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("non-integral input: {0}")]
    NonIntegral(String),
    #[error("empty lattice")]
    EmptyLattice,
    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("enumeration budget exceeded ({0} nodes)")]
    BudgetExceeded(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate neighbor vector: v lies in 2L^#")]
    DegenerateNeighborVector,
    #[error("neighbor vector norm not ≡ 0 mod 4 (norm {0})")]
    NeighborNorm(String),
    #[error("not an isometry of the lattice")]
    NotAnIsometry,
    #[error("order exceeds cap {0}")]
    OrderExceedsCap(u64),
    #[error("no nonzero codewords")]
    ZeroCode,
    #[error("division by zero")]
    ZeroDivision,
    #[error("alpha is not totally positive")]
    NotTotallyPositive,
    #[error("no generator found: {0}")]
    NoGenerator(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
