use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Γ has a pole at every non-positive integer.
    #[error("log-gamma pole at z = {0}")]
    Pole(f64),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid size: {0}")]
    Size(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    /// Ladder-generated S_l disagrees with the direct Gamma ratio.
    #[error("S-matrix ladder drift {drift:e} at l = {l} exceeds {tolerance:e}")]
    LadderDrift { l: usize, drift: f64, tolerance: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
