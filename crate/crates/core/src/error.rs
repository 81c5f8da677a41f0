use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("a permutation group needs at least one generator")]
    NoGenerators,

    #[error("group too large: order {order} exceeds the enumeration limit {limit}")]
    GroupTooLarge { order: u64, limit: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("extension degree {0} is not supported (need 1 <= k <= 4)")]
    UnsupportedExtension(u32),

    #[error("no irreducible polynomial of degree {k} over GF({p}) was found")]
    NoIrreducible { p: u64, k: u32 },

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown group {name:?}; known groups: {}", known.join(", "))]
    UnknownGroup { name: String, known: Vec<String> },

    #[error("group {name} has order {actual}, expected {expected}")]
    OrderMismatch {
        name: String,
        expected: u64,
        actual: u64,
    },

    #[error(transparent)]
    GeneratorFile(#[from] GeneratorFileError),

    #[error("pattern syntax error: {0}")]
    PatternSyntax(String),

    #[error("symbol {0} has no assigned prime")]
    UnassignedSymbol(char),

    #[error("empty input")]
    EmptyInput,
}

/// Failures while reading a permutation generator file.
#[derive(Debug, Error)]
pub enum GeneratorFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: expected `{keyword} <integer>`")]
    MissingHeader { line: usize, keyword: &'static str },

    #[error("line {line}: malformed cycle notation: {reason}")]
    MalformedCycle { line: usize, reason: String },

    #[error("line {line}: point {point} out of range 1..={degree}")]
    PointOutOfRange {
        line: usize,
        point: usize,
        degree: usize,
    },

    #[error("line {line}: point {point} appears more than once")]
    DuplicatePoint { line: usize, point: usize },

    #[error("generators produce order {actual}, file declares {declared}")]
    OrderMismatch { declared: u64, actual: u64 },

    #[error("file declares no generators")]
    NoGenerators,
}
