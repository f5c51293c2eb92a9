use thiserror::Error;

/// Errors raised by the constructors and searches in this crate.
///
/// Search routines that merely run out of budget do not error; they return a
/// result flagged as a lower bound instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set of size {size} exceeds the cap of {cap}")]
    GroundTooLarge { size: usize, cap: usize },
    #[error("element {element} is outside the ground set of size {ground_size}")]
    ElementOutOfRange { element: usize, ground_size: usize },
    #[error("ground-set mismatch: expected {expected}, found {found}")]
    GroundMismatch { expected: usize, found: usize },
    #[error("family violates the convexity axioms: {0}")]
    AxiomViolation(String),
    #[error("closure exceeded the cap of {cap} sets (had {partial} when aborting)")]
    ClosureCap { cap: usize, partial: usize },
    #[error("family is not an antichain: member {smaller} is contained in member {larger}")]
    NotAntichain { smaller: usize, larger: usize },
    #[error("family has duplicate member at positions {0} and {1}")]
    DuplicateMember(usize, usize),
    #[error("family of size {size} exceeds the cap of {cap}")]
    FamilyTooLarge { size: usize, cap: usize },
    #[error("family member {0} is empty and cannot be pierced")]
    EmptyMember(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
