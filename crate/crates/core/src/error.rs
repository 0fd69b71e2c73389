use alloc::string::String;

/// Errors raised by the library. Variants carry enough context to be
/// printed directly by a front end.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("degree parameter k must be at least 2, got {0}")]
    InvalidDegree(u64),
    #[error("parity flag epsilon must be 0 or 1, got {0}")]
    InvalidEpsilon(u8),
    #[error("polynomial has no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("invalid quotient matrix shape: {0}")]
    InvalidShape(String),
    #[error("parameter c out of range (0 < c <= k required), got {0}")]
    InvalidC(String),
    #[error("theta out of range: {0}")]
    OutOfRange(String),
    #[error("theta is not a root of the quotient polynomial (residual {residual:e})")]
    NotARoot { residual: f64 },
    #[error("linear programming hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("root separation below working precision after {0} refinements")]
    PrecisionExhausted(u32),
    #[error("polynomial has non-real roots; the splitting screen needs all roots real")]
    NonRealRoots,
    #[error("interlacing bracket failure: {0}")]
    BracketFailure(String),
    #[error("multiplicity formula degenerates for (k, c) = (2, 1)")]
    DegenerateParameters,
    #[error("angles must satisfy pi/4 < v < w <= pi/2, got v = {v}, w = {w}")]
    AngleOrder { v: f64, w: f64 },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("affine plane construction needs a prime order, got {0}")]
    NonPrimeQ(u64),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid candidate parameters: {0}")]
    InvalidCandidate(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
