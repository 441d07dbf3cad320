//! Error types shared across the crate.

use thiserror::Error;

/// Construction errors for the fixed-point data model.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DataError {
    #[error("weights must be positive integers; zero weight found")]
    ZeroWeight,
    #[error("weight multiset must be nonempty")]
    EmptyWeights,
    #[error("point {point} has {got} weights, expected {expected}")]
    WeightCount {
        point: usize,
        got: usize,
        expected: usize,
    },
    #[error("at least one fixed point is required")]
    NoPoints,
}

/// Errors for symmetric-polynomial specs and localization sums.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SigmaError {
    #[error("elementary symmetric index must be at least 1")]
    ZeroIndex,
    #[error("monomial index {k} exceeds the number of variables {n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("polynomial is not homogeneous: term degrees {first} and {other}")]
    MixedDegree { first: usize, other: usize },
    #[error("Pontryagin report requires half-dimension 4, got {n}")]
    DimensionMismatch { n: usize },
}

/// Errors for the combinatorial constraint checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstraintError {
    #[error("divisor must be at least 2, got {0}")]
    DivisorTooSmall(u64),
    #[error("expected exactly 3 fixed points, got {0}")]
    PointCount(usize),
    #[error("expected half-dimension 4, got {0}")]
    HalfDimension(usize),
}

/// Invalid doubled parameters for the HP^2 action families.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Hp2Error {
    #[error("doubled parameters must be strictly increasing, got ({0}, {1}, {2})")]
    NotStrictlyIncreasing(u64, u64, u64),
    #[error("doubled parameters must share one parity, got ({0}, {1}, {2})")]
    MixedParity(u64, u64, u64),
}

/// Failure modes of the sign solver.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignSolveError {
    #[error("no sign assignment makes the unit localization sum vanish")]
    NoSolution,
    #[error("multiple inequivalent sign assignments make the unit localization sum vanish")]
    Ambiguous,
}

/// Failure modes of family-parameter recovery.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecoverError {
    #[error("no point relabeling satisfies the family identities")]
    NotClassifiable,
    #[error(transparent)]
    Constraint(#[from] ConstraintError),
}

/// Errors surfaced by the verifier pipeline.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifierError {
    #[error("search bound must be at least 2, got {0}")]
    BoundTooSmall(u64),
    #[error(transparent)]
    Constraint(#[from] ConstraintError),
    #[error(transparent)]
    Sigma(#[from] SigmaError),
    /// An admissible configuration failed to match a family action. Must
    /// never occur; any occurrence is either a bug or mathematical news.
    #[error("theorem violation: {detail}")]
    TheoremViolation { detail: String },
}
