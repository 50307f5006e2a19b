use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("constant polynomial")]
    ConstantPolynomial,

    #[error("degree {degree} is too small; need at least {required}")]
    DegreeTooSmall { degree: usize, required: usize },

    #[error("center is a root; reciprocal power sums undefined")]
    CenterIsRoot,

    #[error("bound undefined for this k (k = {k})")]
    BoundUndefined { k: usize },

    #[error("k = {k} is outside {min}..={max}")]
    KOutOfRange { k: usize, min: usize, max: usize },

    #[error("invalid omega condition: {0}")]
    InvalidOmega(String),

    #[error("condition violates ε < 1/h regime")]
    NoSignChange,

    #[error("omega condition was verified for a different center")]
    CenterMismatch,

    #[error("critical-point bound requires p'(ζ)=0 (relative |p'(ζ)| = {residual:e})")]
    NotCritical { residual: f64 },

    #[error("derivative condition not met: b_{index} does not vanish")]
    DerivativeNotVanishing { index: usize },

    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("empty root set")]
    EmptyRootSet,

    #[error("invalid annulus constants: iota1 = {iota1}, iota2 = {iota2}")]
    InvalidIota { iota1: f64, iota2: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("empty input")]
    EmptyInput,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
