use thiserror::Error;

/// Errors raised by the enumeration, closed-form and asymptotic engines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("series has a non-invertible constant term")]
    NotInvertible,

    #[error("gcd({a}, {c}) = {g} does not divide {b}: no lattice point on the boundary")]
    NoSolution { a: u64, b: u64, c: u64, g: u64 },

    #[error("expected an integer, got {0}")]
    NotIntegral(String),

    #[error("identity mismatch: {0}")]
    Mismatch(String),

    #[error("root finder: {0}")]
    RootFinder(String),

    #[error("no excursions of length {0}")]
    NoExcursions(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
