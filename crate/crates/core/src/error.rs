use thiserror::Error;

/// Every failure the toolkit can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field order {0} exceeds the supported maximum of 128")]
    FieldTooLarge(u64),
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no primitive {r}-th root of unity in GF({q})")]
    NoSuchRoot { r: u32, q: u32 },
    #[error("element index {index} out of range for GF({q})")]
    ElementOutOfRange { index: u64, q: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("parity-check matrix does not have full row rank")]
    RankDeficientParity,
    #[error("generator matrix does not have full row rank")]
    RankDeficientGenerator,
    #[error("evaluation points are not distinct")]
    DuplicatePoints,
    #[error("redundancy {i} is invalid for length {n}")]
    BadRedundancy { i: usize, n: usize },
    #[error("enumeration of {size} codewords exceeds cap {cap}")]
    EnumerationTooLarge { size: u128, cap: u128 },
    #[error("code has dimension zero")]
    ZeroCode,
    #[error("matrix shape error: {0}")]
    ShapeError(String),
    #[error("mixing matrix does not have full row rank")]
    RankDeficientA,
    #[error("mixing matrix is not square")]
    NonSquareA,
    #[error("mixing matrix is singular")]
    SingularA,
    #[error("constituent {0} has no parity-check matrix")]
    MissingParity(usize),
    #[error("mixing matrix is not non-singular by columns")]
    NotNsc,
    #[error("length {0} is too short for symbol-pair analysis")]
    TooShort(usize),
    #[error("dimension {k} exceeds the symbol-pair Singleton bound for n={n}, d_sp={d_sp}")]
    BoundViolation { n: usize, k: usize, d_sp: usize },
    #[error("permutation of length {perm} applied to code of length {code}")]
    SizeMismatch { perm: usize, code: usize },
    #[error("length {n} exceeds the number of field elements {q}")]
    TooLong { n: usize, q: u32 },
    #[error("inadmissible parameters: {0}")]
    InadmissibleParameters(String),
    #[error("verification failed: {reason}")]
    VerificationFailed {
        reason: String,
        report: Box<crate::sympair::PairAnalysisReport>,
    },
    #[error("malformed code file: {0}")]
    MalformedFile(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
