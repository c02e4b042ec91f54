use thiserror::Error;

use crate::group::OrderViolation;
use crate::transform::Trace;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vectors must have dimension at least 1")]
    ZeroDimension,

    #[error("invalid step: {0}")]
    InvalidStep(String),

    #[error("vectors are already comparable")]
    AlreadyComparable,

    #[error("the game is already won")]
    AlreadyWon,

    #[error("empty vector list")]
    EmptyInput,

    #[error("step limit of {limit} exceeded")]
    StepLimitExceeded { limit: usize, partial: Trace },

    #[error("adversary chose {choice}, which is not in J = {allowed:?}")]
    InvalidChoice { choice: usize, allowed: Vec<usize> },

    #[error("adversary aborted after {} rounds", partial.len())]
    Aborted { partial: Trace },

    #[error("invalid group order: {}", display_violations(.0))]
    InvalidOrder(Vec<OrderViolation>),

    #[error("element {index} is negative")]
    NegativeElement { index: usize },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// Partial progress recorded by an interrupted run, if any.
    pub fn partial_trace(&self) -> Option<&Trace> {
        match self {
            Error::StepLimitExceeded { partial, .. } | Error::Aborted { partial } => Some(partial),
            _ => None,
        }
    }
}

fn display_violations(v: &[OrderViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
