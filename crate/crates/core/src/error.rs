use thiserror::Error;

/// Errors surfaced by parsing, validation and the exhaustive oracle.
///
/// Structural misuse of correct values (size mismatches in composition,
/// applying a move that does not fit the permutation) panics instead: those
/// indicate bugs in the caller, not bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation must contain at least one element")]
    Empty,

    #[error("value {value} is out of range 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },

    #[error("value {0} appears more than once")]
    DuplicateValue(usize),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("invalid block-interchange indices ({i},{j},{k},{l}): need 1 <= i < j <= k < l")]
    InvalidIndices {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },

    #[error("{op} requires {requires}")]
    Precondition {
        op: &'static str,
        requires: &'static str,
    },

    #[error("move {index} ({mv}) is not a prefix block-interchange")]
    NotPrefix { index: usize, mv: String },

    #[error("move {index} ({mv}) does not fit a permutation of size {n}")]
    MoveOutOfRange { index: usize, mv: String, n: usize },

    #[error("size {n} exceeds the configured maximum {cap} for exhaustive search")]
    BudgetExceeded { n: usize, cap: usize },

    #[error("size {n} is below the minimum {min} for this construction")]
    SizeTooSmall { n: usize, min: usize },

    #[error("distance table file is invalid: {0}")]
    BadTableFile(String),
}
