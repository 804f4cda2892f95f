use thiserror::Error;

/// Errors raised by the library.
///
/// `InvariantFailure` is reserved for outcomes that a proven statement rules
/// out (non-unique maxima, inconsistent propagation, a solver finding zero or
/// several transitions). Seeing one means a bug or a convention mismatch.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MvError {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),

    #[error("type G2 is not supported: G2 tropical Plücker relations out of scope")]
    G2Unsupported,

    #[error("rank {rank} exceeds the enumeration cap {cap}; pass an override to lift it")]
    RankCap { rank: usize, cap: usize },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a BZ datum: {0}")]
    InvalidBz(String),

    #[error("vertex family is not GGMS: {0}")]
    NotGgms(String),

    #[error("invariant failure: {0}")]
    InvariantFailure(String),

    #[error("matrix is singular")]
    Singular,

    #[error("cell membership violated: {0}")]
    CellMembership(String),

    #[error("valuation of the zero function is undefined")]
    UndefinedValuation,

    #[error("polynomial degree {0} exceeds the configured bound")]
    DegreeBound(usize),

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, MvError>;
