//! Exact decomposition of tensor products of sl₂ Verma modules.
//!
//! The crate has two sides that check each other:
//!
//! * a closed-form side ([`fusion`], [`characters`], [`rankin_cohen`]) that
//!   predicts which summands are projective covers `P(a)` and which are Verma
//!   modules `M(b)`;
//! * a brute-force side ([`weight_module`], [`primary`]) that builds the
//!   truncated tensor product weight layer by weight layer, splits it by
//!   generalized Casimir eigenspaces and classifies every component using
//!   exact kernels over ℚ(i).

pub mod characters;
pub mod error;
pub mod fusion;
pub mod linalg;
pub mod primary;
pub mod rankin_cohen;
pub mod scalar;
pub mod weight_module;

pub use characters::{
    component_character, decomposition_character, grothendieck_equal, tensor_character, verma_tensor_module_character,
    FiniteDimCharacter, GrothendieckVector,
};
pub use error::{Error, Result};
pub use fusion::{
    clebsch_gordan_summand, duality_predicates, fusion_sets, is_antidominant, multiplicity_two_condition,
    multiplicity_two_crosscheck, predicted_decomposition, tensor_iso_check, DecompositionReport, FusionSets, Summand,
};
pub use linalg::Matrix;
pub use primary::{
    character_orbit, character_support, classify_component, hom_dim, singular_vectors, CharacterOrbit, ComponentTag,
    PrimaryComponentShape,
};
pub use rankin_cohen::{rc_coefficients, rc_is_zero, rc_operator, Poly1, RCOperator};
pub use scalar::{format_scalar, parse_scalar, GaussianRational};
pub use weight_module::{casimir_eigenvalue, TensorModuleSpec};
