use thiserror::Error;

use crate::scalar::{GaussianRational, ParseScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error(transparent)]
    Parse(#[from] ParseScalarError),

    #[error("layer {k} is outside the retained layers 0..={cutoff}")]
    LayerOutOfRange { k: usize, cutoff: usize },

    /// The raising operator has no target below the top layer.
    #[error("the raising operator is not defined on layer 0")]
    NoLayerAbove,

    #[error("cutoff {cutoff} is too small: layer {needed} is required")]
    InsufficientCutoff { needed: usize, cutoff: usize },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(Box<DegreeTriple>),

    #[error("{nu} is not a weight of the tensor product")]
    NotInSupport { nu: Box<GaussianRational> },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    /// Oracle evidence contradicts itself. Never expected on valid input.
    #[error("inconsistent oracle evidence: {0}")]
    Inconsistent(String),
}

/// Bidegree `(λ′, λ″)` and target degree `λ‴` with `λ‴ − λ′ − λ″ ∉ 2ℕ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTriple {
    pub lam1: GaussianRational,
    pub lam2: GaussianRational,
    pub lam3: GaussianRational,
}

impl std::fmt::Display for DegreeTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "λ‴ - λ′ - λ″ = ({}) - ({}) - ({}) is not in 2N", self.lam3, self.lam1, self.lam2)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
