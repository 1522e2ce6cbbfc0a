//! Error type shared by all operations of the crate.

use crate::model::Scaling;
use std::fmt;

/// Everything that can go wrong while specifying, filtering, estimating or
/// forecasting a score-driven model.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An observation or a parameter vector lies outside its domain.
    Domain(String),
    /// The requested scaling is not available for this distribution.
    UnsupportedScaling { dist: &'static str, scaling: Scaling },
    /// The Fisher information is numerically singular at the current point.
    SingularInformation,
    /// Data cannot identify the static parameters (e.g. zero variance).
    DegenerateData(String),
    /// The recursion left the representable range or the parameter domain.
    FilterDivergence { t: usize },
    /// `I - sum(B_j)` is numerically singular; no unconditional mean exists.
    NonstationaryB,
    /// Every optimization start diverged or failed.
    AllStartsFailed,
    /// The Hessian at the optimum is singular; standard errors unavailable.
    SingularHessian,
    /// An operation received an empty input.
    EmptyInput,
    /// A model specification violates its invariants.
    InvalidSpec(String),
    /// The series is too short for the requested lag structure.
    InsufficientData(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::UnsupportedScaling { dist, scaling } => {
                write!(f, "scaling d={} is not supported by {dist}", scaling.d())
            }
            Error::SingularInformation => {
                write!(f, "Fisher information is singular at the current point")
            }
            Error::DegenerateData(msg) => write!(f, "degenerate data: {msg}"),
            Error::FilterDivergence { t } => {
                write!(f, "filter diverged at period {t}")
            }
            Error::NonstationaryB => {
                write!(f, "I - sum(B_j) is singular; unconditional mean undefined")
            }
            Error::AllStartsFailed => write!(f, "all optimization starts failed"),
            Error::SingularHessian => write!(f, "Hessian is singular; no standard errors"),
            Error::EmptyInput => write!(f, "empty input"),
            Error::InvalidSpec(msg) => write!(f, "invalid model specification: {msg}"),
            Error::InsufficientData(msg) => write!(f, "insufficient data: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
