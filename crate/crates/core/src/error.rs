use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("outside the linear regime: beta = {beta} (|omega| r / c must be below 1)")]
    Regime { beta: f64 },

    #[error("no complete loop: angular frequency is zero")]
    NoCompleteLoop,

    #[error("no solution: degenerate radii")]
    DegenerateRadii,

    #[error("no solution: degenerate frequencies")]
    DegenerateFrequencies,

    #[error("no real radius for this k (radicand {radicand})")]
    NoRealRadius { radicand: f64 },

    #[error("state is not normalized: sum of squared amplitudes = {norm_sqr}")]
    Unnormalized { norm_sqr: f64 },

    #[error("hydrogen orbits require SI units")]
    SiUnitsRequired,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
