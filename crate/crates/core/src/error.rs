use thiserror::Error;

/// Errors raised across the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrime(u32),
    #[error("field of order {p}^{m} exceeds 2^16")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("modulus is not a monic irreducible polynomial of the stated degree")]
    ReducibleModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("vector or code length {0} is odd")]
    OddLength(usize),
    #[error("operation undefined for the zero code")]
    ZeroCode,
    #[error("enumeration needs {needed} projective classes, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("minimum distance has not been established")]
    DistanceUnknown,
    #[error("evaluation points are not pairwise distinct")]
    DuplicatePoints,
    #[error("column multipliers must be nonzero")]
    ZeroMultiplier,
    #[error("length {n} unsupported over GF({q}): {reason}")]
    UnsupportedLength { q: u32, n: usize, reason: String },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("GRM order {r} out of range for m = {m}, q = {q}")]
    OrderOutOfRange { q: u32, m: u32, r: u32 },
    #[error("construction condition violated: {0}")]
    ConditionViolated(String),
    #[error("additive code has no stored preimage")]
    NotPhiImage,
    #[error("permutation of size {perm} applied to length {len}")]
    SizeMismatch { perm: usize, len: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("criterion failed: {0}")]
    CriterionFailed(String),
    #[error("randomized search exhausted {trials} trials: {what}")]
    SearchExhausted { what: String, trials: u64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
