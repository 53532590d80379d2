use thiserror::Error;

/// Errors raised by the model, integrator and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EpiError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid integrator configuration: {0}")]
    Config(String),

    #[error("no epidemic: r0*S0 <= 1 (r0 = {r0}, S0 = {s0})")]
    NoEpidemic { r0: f64, s0: f64 },

    #[error("event not found: {0}")]
    EventNotFound(String),

    #[error("no convergence after {iterations} iterations: {what}")]
    Convergence { what: String, iterations: usize },

    #[error("quadrature tolerance {tolerance:e} not met with {panels} panels (error estimate {estimate:e})")]
    Quadrature {
        tolerance: f64,
        panels: usize,
        estimate: f64,
    },

    #[error("at r0 = {r0}: {source}")]
    SweepPoint {
        r0: f64,
        #[source]
        source: Box<EpiError>,
    },
}

pub type Result<T> = std::result::Result<T, EpiError>;
