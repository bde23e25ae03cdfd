use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("exponent has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },

    #[error("monomial {exponent:?} has zero weight at the sampled parameters")]
    ZeroWeight { exponent: Vec<i64> },

    #[error("virtual character has nonzero fixed part {coefficient}")]
    NonzeroFixedPart { coefficient: BigInt },

    #[error("no admissible parameter point after {attempts} attempts")]
    ParametersExhausted { attempts: usize },

    #[error("localization at n = {n} depends on the parameter point: {values:?}")]
    ParameterDependence { n: usize, values: Vec<BigRational> },

    #[error("localization at n = {n} is not an integer: {value}")]
    NonIntegral { n: usize, value: BigRational },

    #[error("chart {index} is not a lattice basis (determinant {det})")]
    InvalidChart { index: usize, det: i64 },

    #[error("unknown space `{0}`")]
    UnknownSpace(String),

    #[error("invalid bundle: {0}")]
    InvalidBundle(String),

    #[error("invalid partition data: {0}")]
    InvalidPartition(String),

    #[error("ring has dimension {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },

    #[error("basis matrix for r = {r} is singular")]
    SingularBasisMatrix { r: usize },

    #[error("series has non-unit constant term {0}")]
    NonUnitConstant(BigRational),

    #[error("at least {min} trials are required, got {got}")]
    TooFewTrials { min: usize, got: usize },
}
