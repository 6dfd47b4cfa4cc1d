use thiserror::Error;

/// Errors raised by the library. Each variant maps to one failure class of
/// the command-line front end (see [`Error::exit_code`]).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("duplicate index label `{0}`")]
    DuplicateLabel(String),
    #[error("empty index set")]
    EmptyIndexSet,
    #[error("diagonal entry a[{index}][{index}] = {value} must be 2 or nonpositive")]
    BadDiagonal { index: String, value: i64 },
    #[error("diagonal entry a[{index}][{index}] = {value} is odd")]
    OddDiagonal { index: String, value: i64 },
    #[error("off-diagonal entry a[{i}][{j}] = {value} is positive")]
    PositiveOffDiagonal { i: String, j: String, value: i64 },
    #[error("a[{i}][{j}] = {a_ij} but a[{j}][{i}] = {a_ji}: zero pattern is not symmetric")]
    ZeroPatternMismatch { i: String, j: String, a_ij: i64, a_ji: i64 },
    #[error("matrix is not symmetrizable (entries a[{i}][{j}], a[{j}][{i}])")]
    NotSymmetrizable { i: String, j: String },
    #[error("symmetrizer {0:?} is invalid for this matrix")]
    BadSymmetrizer(Vec<i64>),
    #[error("weight `{name}` has {len} pairings, expected {expected}")]
    WeightLength { name: String, len: usize, expected: usize },
    #[error("weight `{name}` has negative pairing {value} at index `{index}`")]
    NegativeWeight { name: String, index: String, value: i64 },
    #[error("unknown weight `{0}`")]
    UnknownWeight(String),
    #[error("unknown index `{0}`")]
    UnknownIndex(String),
    #[error("copies budget for imaginary index `{0}` must be at least 1")]
    BadCopies(String),
    #[error("copies budget exceeded for index `{index}` (needs copy {needed}, budget {budget})")]
    CopiesExceeded { index: String, needed: usize, budget: usize },
    #[error("index word does not account for the root coefficients of the weight: {0}")]
    WordWeightMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("json error: {0}")]
    Json(String),
    #[error("index `{0}` is not real")]
    NotReal(String),
    #[error("index `{0}` is not imaginary")]
    NotImaginary(String),
    #[error("root operator f_{index} undefined on this path: level {level} never reached after the last minimum")]
    OperatorUndefined { index: String, level: i64 },
    #[error("path is not a member of the supplied crystal")]
    NotInCrystal,
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("admissibility: {0}")]
    Admissibility(String),
    #[error("imaginary letters `{0}` cannot be merged: {1}")]
    MergeBlocked(String, String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Admissibility(_) | Error::MergeBlocked(..) => 3,
            Error::Budget(_) | Error::CopiesExceeded { .. } => 5,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
