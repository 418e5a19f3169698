use thiserror::Error;

/// Crate-wide error type. Variants carry enough coordinates to pinpoint the
/// offending input (row/column for parse errors, indices for range errors).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("header line is not a vertex count: {0:?}")]
    MalformedHeader(String),
    #[error("not a comma-separated vertex list: {0:?}")]
    BadVertexList(String),
    #[error("expected {expected} rows after the header, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("row {row}: expected {expected} characters, found {found}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("row {row}, column {col}: invalid character {ch:?}, expected '0' or '1'")]
    BadCharacter { row: usize, col: usize, ch: char },
    #[error("row {i}, column {i}: diagonal entry must be 0")]
    NonzeroDiagonal { i: usize },
    #[error("pair ({i},{j}): exactly one of the two arcs must be present")]
    BrokenPair { i: usize, j: usize },
    #[error("a tournament needs at least {min} vertices, got {n}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("vertex {index} out of range for order {n}")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("vertices must be distinct")]
    SameVertex,
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("{0} is not congruent to 3 modulo 4")]
    NotThreeModFour(u64),
    #[error("order must be odd, got {0}")]
    EvenOrder(usize),
    #[error("connection symbols must contain exactly one of s and n-s for each s; violated at s = {s}")]
    BadSymbols { s: usize },
    #[error("component orders differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("tournament is not regular")]
    NotRegular,
    #[error("tournament is not doubly regular")]
    NotDoublyRegular,
    #[error("vertex {x} must dominate vertex {y}")]
    ArcRequired { x: usize, y: usize },
    #[error("empty vertex subset")]
    EmptySubset,
    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("subset size {p} out of range {lo}..={hi}")]
    SizeOutOfRange { p: usize, lo: usize, hi: usize },
    #[error("order {n} is not of the form 4t+3 with t >= 1")]
    NotDoublyRegularOrder { n: usize },
    #[error("denominator must be positive")]
    NonPositiveDenominator,
    #[error("resulting coefficients are not all integers")]
    NonIntegerCoefficient,
    #[error("polynomial must be monic of degree {expected}")]
    NotMonicOfDegree { expected: usize },
    #[error("classification by pair deletion requires order >= 5, got {0}")]
    ClassifyOrderTooSmall(usize),
    #[error("order {n} exceeds the brute-force switching bound {bound}")]
    AboveSwitchBound { n: usize, bound: usize },
    #[error("census order {n} outside the supported range {lo}..={hi}")]
    CensusOrder { n: usize, lo: usize, hi: usize },
    #[error("census parameters inconsistent: {0}")]
    CensusParams(String),
    #[error("checkpoint incompatible with requested census: {0}")]
    CheckpointMismatch(String),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
