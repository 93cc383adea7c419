use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rejected density: {0}")]
    RejectedDensity(String),

    #[error("transform requires finite total mass (decay exponent {delta} <= 1)")]
    InfiniteMass { delta: f64 },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("transform stage {stage} failed: {source}")]
    TransformStage { stage: usize, source: Box<Error> },

    #[error("point ({re}, {im}) lies on the branch cut (-inf, 0]")]
    NotOnCutPlane { re: f64, im: f64 },

    #[error("divergent integral: {0}")]
    DivergentIntegral(String),

    #[error("quadrature tolerance not met: value {value}, error estimate {err_estimate}")]
    ToleranceNotMet { value: f64, err_estimate: f64 },

    #[error("bracket expansion failed: {0}")]
    BracketFailure(String),

    #[error("argument outside the declared domain: {0}")]
    DomainError(String),

    #[error("catalog entry not found: {0}")]
    NotFound(String),

    #[error("entry {0} has no closed-form left-hand side (tier 2)")]
    TierMismatch(String),

    #[error("entry {0} makes no zero-free claim")]
    NoClaim(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

impl Error {
    /// Numerical failures (as opposed to usage errors or answers).
    pub fn is_numerical(&self) -> bool {
        match self {
            Error::ToleranceNotMet { .. } | Error::BracketFailure(_) => true,
            Error::TransformStage { source, .. } => source.is_numerical(),
            _ => false,
        }
    }
}
