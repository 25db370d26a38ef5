use thiserror::Error;

/// Errors from constructing or querying a [`Tournament`](crate::Tournament).
///
/// Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TournamentError {
    #[error("order {0} out of range (must be 1..=64)")]
    InvalidOrder(usize),
    #[error("dominance table is not {order}x{order}")]
    NotSquare { order: usize },
    #[error("reflexive entry at ({0},{0})")]
    Reflexive(usize),
    #[error("asymmetry violated at ({0},{1})")]
    AsymmetryViolated(usize, usize),
    #[error("completeness violated at ({0},{1})")]
    CompletenessViolated(usize, usize),
    #[error("alternative {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("set contains alternatives outside 0..{order}")]
    SetOutOfRange { order: usize },
    #[error("empty set of alternatives")]
    EmptySet,
    #[error("order {0} is odd; a structured composition needs an even half")]
    OddOrder(usize),
}

/// Errors from reading the text tournament format. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: TournamentError,
    },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Malformed { line, .. } | ParseError::Invalid { line, .. } => *line,
        }
    }
}

/// Errors from TEQ computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TeqError {
    #[error(transparent)]
    Tournament(#[from] TournamentError),
    #[error("order {order} exceeds the brute-force limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("time budget exhausted")]
    TimedOut,
}
