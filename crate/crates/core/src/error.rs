use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("need at least {min} observations, got {got}")]
    TooFewObservations { min: usize, got: usize },
    #[error("sample has zero variance")]
    DegenerateSample,
    #[error("non-finite observation at index {0}")]
    NonFinite(usize),
    #[error("invalid tuning parameter: {0}")]
    InvalidTuning(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("quadrature did not reach the requested accuracy: {0}")]
    QuadratureFailure(String),
    #[error("infeasible moments: beta2 = {beta2} must exceed beta1 + 1 = {bound}")]
    InfeasibleMoments { beta2: f64, bound: f64 },
    #[error("alternative {0} has no finite second moment")]
    UnsupportedAlternative(String),
    #[error("sample size {n} outside supported range [{min}, {max}]")]
    UnsupportedSampleSize { n: usize, min: usize, max: usize },
    #[error("no critical value available: {0}")]
    MissingCriticalValue(String),
    #[error("unknown alternative name: {0}")]
    UnknownAlternativeName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
