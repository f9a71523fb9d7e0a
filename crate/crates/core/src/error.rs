use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A physical parameter is outside the domain of the formulas.
    #[error("invalid parameter `{symbol}`: {reason}")]
    Parameter {
        symbol: &'static str,
        reason: String,
    },

    /// |tanh r| reached or exceeded 1; the closed-form squeeze is not evaluable here.
    #[error("squeeze formula outside its domain: |tanh r| = {magnitude}")]
    SqueezeDomain { magnitude: f64 },

    #[error("displacement denominator vanishes (parametric resonance): |den| = {magnitude:e}")]
    SingularDisplacement { magnitude: f64 },

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("invalid sweep: {0}")]
    Sweep(String),

    #[error("Fock truncation too small: boundary population {population:e} exceeds {threshold:e}")]
    CutoffLeakage { population: f64, threshold: f64 },

    #[error("integration failed: {0}")]
    Integration(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn param(symbol: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            symbol,
            reason: reason.into(),
        }
    }
}
