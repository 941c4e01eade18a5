use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building fields, rings and codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} is larger than the supported 2^20")]
    FieldTooLarge(u64),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative power of zero")]
    NegativePowerOfZero,
    #[error("{0} is undefined for zero")]
    ZeroInput(&'static str),
    #[error("{e} does not divide q - 1 = {q_minus_one}")]
    NoRootsOfUnity { e: usize, q_minus_one: u64 },
    #[error("invalid root order: {0}")]
    BadRoots(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("M M^T is not a scalar multiple of the identity")]
    NotScalarGram,
    #[error("gamma must be nonzero")]
    GammaZero,
    #[error("gamma^e = {0} is not a square in F_q^*")]
    GammaNotSquare(String),
    #[error("no Gray matrix found within the search space")]
    SearchExhausted,
    #[error("search space too large: e <= 4 and q <= 49 are supported")]
    SearchTooLarge,
    #[error("component {index}: {poly} does not divide x^{n} - 1")]
    NotDivisor { index: usize, poly: String, n: usize },
    #[error("expected {expected} component generators, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("inconsistent weight distribution: {0}")]
    BadDistribution(String),
    #[error("invalid code specification: {0}")]
    BadSpec(String),
}
