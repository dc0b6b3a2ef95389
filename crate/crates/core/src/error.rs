use alloc::string::String;

use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable {0} is not a time variable")]
    NotTimeVariable(Var),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot invert a series whose leading coefficient is zero to the known precision")]
    ZeroLeading,
    #[error("cannot invert an exact series with more than one term; truncate it first")]
    UnboundedPrecision,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("length {len} is shorter than the partition length {parts}")]
    LengthTooSmall { len: usize, parts: usize },
    #[error("the empty partition is not allowed here")]
    Empty,
    #[error("parts must be weakly decreasing")]
    NotDecreasing,
    #[error("cannot parse partition at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GapError {
    #[error("a gap sequence needs at least one gap")]
    Empty,
    #[error("gaps must be positive, distinct and sorted")]
    Malformed,
    #[error("complement is not a semigroup: {a} and {b} are nongaps but {sum} is a gap")]
    NotSemigroup { a: u32, b: u32, sum: u32 },
    #[error("({n}, {s}) must both be at least 2 and coprime")]
    InvalidType { n: u32, s: u32 },
    #[error("k = {k} is outside 0..={genus}")]
    KOutOfRange { k: usize, genus: usize },
    #[error("n = {n} is outside the admissible range for genus {genus}")]
    NOutOfRange { n: usize, genus: usize },
    #[error("the constant is undefined for the empty partition")]
    EmptyPartition,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("{vars} variables cannot carry a partition of length {parts}")]
    TooFewVariables { vars: usize, parts: usize },
    #[error("alternant is not divisible by the Vandermonde product")]
    InexactVandermonde,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("cannot parse at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TauError {
    #[error("k = {k} is outside 1..={len}")]
    KOutOfRange { k: usize, len: usize },
    #[error("the base partition is empty")]
    EmptyBase,
    #[error("cutoff {cutoff} is below the base weight {weight}")]
    CutoffBelowBase { cutoff: u32, weight: u32 },
    #[error("term {0} does not strictly contain the base partition or exceeds the cutoff")]
    InvalidTerm(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Type(#[from] GapError),
    #[error("(n, s) = ({n}, {s}) needs n < s")]
    NotOrdered { n: u32, s: u32 },
    #[error("monomial x^{i} y^{j} is not allowed (need j < n and n*i + s*j < n*s)")]
    IndexOutOfRange { i: u32, j: u32 },
    #[error("precision {got} is too small, need at least {needed}")]
    InsufficientPrecision { needed: i64, got: i64 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}
