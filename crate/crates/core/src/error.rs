use thiserror::Error;

use crate::rings::RingDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring descriptor mismatch: {left} vs {right}")]
    DescriptorMismatch {
        left: RingDescriptor,
        right: RingDescriptor,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A construction produced something that fails its own certificate.
    /// Never expected; surfaced instead of a silent negative answer.
    #[error("axiom violation: {0}")]
    AxiomViolation(String),

    #[error("enumeration budget exceeded: {size} elements > budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("uniqueness violated: found distinct witnesses {0} and {1}")]
    UniquenessViolation(usize, usize),
}

impl Error {
    /// Stable machine-readable code, used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DescriptorMismatch { .. } => "descriptor-mismatch",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::InvalidDescriptor(_) => "invalid-descriptor",
            Error::InvalidElement(_) => "invalid-element",
            Error::Unsupported(_) => "unsupported",
            Error::Precondition(_) => "precondition",
            Error::AxiomViolation(_) => "axiom-violation",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::UniquenessViolation(..) => "uniqueness-violation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
