use thiserror::Error;

/// Errors produced by shape construction and the search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("composition parts must be positive")]
    InvalidComposition,
    #[error("a ribbon needs at least one row")]
    EmptyRibbon,
    #[error("inner shape does not fit inside outer shape")]
    InnerNotContained,
    #[error("row {row} expects {expected} entries, got {got}")]
    RowLengthMismatch {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("tableau entries must be positive")]
    NonPositiveEntry,
    #[error("row index {j} out of range 1..={max}")]
    RowIndexOutOfRange { j: usize, max: usize },
    #[error("permutation is not a bijection on 0..{m}")]
    InvalidPermutation { m: usize },
    #[error("rectangle dimensions must be positive")]
    EmptyRectangle,
    #[error("content has {got} boxes but the shape has {expected}")]
    ContentSizeMismatch { expected: usize, got: usize },
    #[error("skew shape is not a ribbon")]
    NotRibbon,
    #[error("rows {j} and {next} are not semistandard as a pair", next = j + 1)]
    PairNotSemistandard { j: usize },
    #[error("left row must hold at least as many balls as the right row")]
    PairingSizeMismatch,
    #[error("tableau is not a Littlewood-Richardson filling")]
    NotLittlewoodRichardson,
    #[error("swap at row {i} requires a strictly shorter row below")]
    SwapRowsNotDecreasing { i: usize },
    #[error("swap at row {i} requires the row to be shorter than its neighbours combined")]
    SwapTriangleViolated { i: usize },
    #[error("repair sequence did not reach an LR tableau")]
    RepairExhausted,
    #[error("rows must be weakly decreasing")]
    UnsortedRows,
    #[error("every row must be at least two boxes long")]
    RowTooShort,
    #[error("at least three rows are required")]
    TooFewRows,
    #[error("necessary condition holds at j={j}; no separating witness exists there")]
    WitnessHypothesisNotMet { j: usize },
    #[error("witness construction produced a non-LR tableau (internal error)")]
    WitnessConstruction,
    #[error("{boxes} boxes exceeds the oracle limit of {limit}")]
    OracleLimitExceeded { boxes: usize, limit: usize },
    #[error("time budget exceeded")]
    Timeout,
    #[error("invalid tableau text: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
