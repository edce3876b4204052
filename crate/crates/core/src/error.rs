use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value for `{field}`: {value}")]
    NonFinite { field: &'static str, value: f64 },

    #[error("wave speed k must be positive and finite, got {0}")]
    InvalidWaveSpeed(f64),

    #[error("xi = {xi} lies outside the fan interval [{lo}, {hi}]")]
    OutsideFan { xi: f64, lo: f64, hi: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("time step violates the stability limit: {0}")]
    Stability(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn finite(field: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { field, value })
    }
}
