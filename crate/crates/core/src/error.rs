//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("p = {0} is outside the supported range p >= 2")]
    ExponentOutOfRange(f64),

    #[error("degree alpha = {0} is outside the supported range alpha >= 1")]
    DegreeOutOfRange(f64),

    #[error("argument s = {0} is outside the domain {1}")]
    ArgumentOutOfDomain(f64, &'static str),

    #[error("series did not meet the truncation tolerance {tol:e} within {max_terms} terms")]
    SeriesNotConverged { max_terms: usize, tol: f64 },

    #[error("series coefficients overflow for p = {0}; exponent too large for this scalar type")]
    SeriesOverflow(f64),

    #[error("ODE step size underflow near t = {0}; local error control cannot meet tolerance")]
    OdeStepUnderflow(f64),

    #[error("ODE integrator exceeded {0} steps before reaching the target")]
    OdeTooManySteps(usize),

    #[error("no sign change found while bracketing a root of {what} (last abscissa {at})")]
    BracketFailure { what: &'static str, at: f64 },

    #[error("quadrature interval [{0}, {1}] passes through a zero of f1")]
    QuadratureThroughZero(f64, f64),

    #[error("adaptive quadrature did not converge on [{0}, {1}]")]
    QuadratureNotConverged(f64, f64),

    #[error("exact polynomial degree {0} exceeds the supported maximum {1}")]
    DegreeTooLarge(usize, usize),

    #[error("invalid increment frame: {0}")]
    InvalidFrame(String),

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("invalid simulation configuration: {0}")]
    InvalidConfig(String),
}
