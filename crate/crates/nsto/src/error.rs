use std::fmt;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("pole: {what} at {at}")]
    Pole { what: &'static str, at: f64 },
    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },
    #[error("integral diverges: {0}")]
    Divergence(String),
    #[error("cancellation too severe (condition {condition:.3e})")]
    Instability { condition: f64 },
    #[error("quadrature tolerance not met: {value:e} +- {error:e}")]
    Tolerance { value: f64, error: f64 },
    #[error("kernel singular at r1 = r2 = {0}")]
    Singular(f64),
    #[error("result is not finite")]
    NotFinite,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(args: fmt::Arguments<'_>) -> Error {
    Error::Domain(args.to_string())
}

macro_rules! ensure_domain {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::domain(format_args!($($arg)+)));
        }
    };
}
pub(crate) use ensure_domain;
