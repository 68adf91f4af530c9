use thiserror::Error;

use crate::exact_linalg::Ring;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: Ring, found: Ring },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("not a full subdiagram: {0}")]
    NotASubdiagram(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("internal closure failure (solver bug): {0}")]
    InternalClosureFailure(String),
    #[error("projected tuple not in span (solver bug): {0}")]
    NotInSpan(String),
    #[error("coalgebra mismatch: {0}")]
    CoalgebraMismatch(String),
    #[error("not a module morphism: fails at basis index {0}")]
    NotAMorphism(usize),
    #[error("not a coalgebra morphism: {0}")]
    NotACoalgebraMorphism(String),
    #[error("chain mismatch: {0}")]
    ChainMismatch(String),
    #[error("not an endomorphism of the module: {0}")]
    NotAnEndomorphism(String),
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
