use thiserror::Error;

use crate::element::Point;

/// Errors raised by the element constructors and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {0} occurs twice as a source or twice as a target")]
    NonInjective(Point),
    #[error("point {0} is both a source and a domain hole")]
    SourceIsHole(Point),
    #[error("point {0} is an image but would also be fixed by the cofinite identity part")]
    TargetIsFixed(Point),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("element {0} is not an idempotent")]
    NotIdempotent(String),
    #[error("elements {0} and {1} have different coranks")]
    NotDRelated(String, String),
    #[error("element {0} is not a total bijection")]
    NotBijection(String),
    #[error("element {0} is not a permutation of its domain")]
    NotPermutation(String),
    #[error("neighbourhoods of different flavours")]
    FlavorMismatch,
    #[error("cannot separate an element from itself")]
    EqualElements,
    #[error("constraint set {0} is not contained in the domain")]
    ConstraintOutsideDomain(String),
    #[error("inversion is not continuous at {0} in the WF topology")]
    InversionDiscontinuous(String),
    #[error("window of size {size} exceeds the bound {bound}")]
    WindowTooLarge { size: usize, bound: usize },
}

impl Error {
    /// The variant name, used by the CLI for diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonInjective(_) => "NonInjective",
            Error::SourceIsHole(_) => "SourceIsHole",
            Error::TargetIsFixed(_) => "TargetIsFixed",
            Error::Syntax { .. } => "SyntaxError",
            Error::NotIdempotent(_) => "NotIdempotent",
            Error::NotDRelated(..) => "NotDRelated",
            Error::NotBijection(_) => "NotBijection",
            Error::NotPermutation(_) => "NotPermutation",
            Error::FlavorMismatch => "FlavorMismatch",
            Error::EqualElements => "EqualElements",
            Error::ConstraintOutsideDomain(_) => "ConstraintOutsideDomain",
            Error::InversionDiscontinuous(_) => "InversionDiscontinuous",
            Error::WindowTooLarge { .. } => "WindowTooLarge",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
