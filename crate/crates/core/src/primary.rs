//! Brute-force split of the truncated tensor product into Casimir-primary
//! components, and classification of each component by exact linear algebra.
//!
//! Two weights `ν` and `ν* = −ν − 2` share a Casimir eigenvalue, so when both
//! lie in `X = μ′ + μ″ − 2ℕ` their Verma classes sit in one primary component.
//! Such a component is either `M(ν_high) ⊕ M(ν_low)` or the projective cover
//! `P(ν_low)`, and the two are told apart by counting singular vectors of
//! weight `ν_low` inside the component: two for the direct sum, one for the
//! projective cover. Non-semisimplicity of the Casimir on the component is
//! recorded as an independent cross-check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;
use crate::weight_module::{casimir_eigenvalue, TensorModuleSpec};

/// A Casimir eigenvalue of the tensor product, recorded by its weights in `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterOrbit {
    /// Representative: the member of `X` on the smaller layer.
    pub nu: GaussianRational,
    /// `−ν − 2`.
    pub partner: GaussianRational,
    pub partner_in_x: bool,
    pub k: usize,
    pub k_partner: Option<u64>,
}

impl CharacterOrbit {
    /// Both `ν` and a distinct `ν*` are weights of the tensor product.
    pub fn is_paired(&self) -> bool {
        self.partner_in_x && self.partner != self.nu
    }

    /// Deepest layer the component occupies.
    pub fn max_layer(&self) -> u64 {
        match self.k_partner {
            Some(kp) if self.is_paired() => kp.max(self.k as u64),
            _ => self.k as u64,
        }
    }

    pub fn casimir_value(&self) -> GaussianRational {
        casimir_eigenvalue(&self.nu)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ComponentTag {
    /// A single Verma module `M(ν)`.
    Verma { nu: GaussianRational },
    /// `M(high) ⊕ M(low)` with `low = −high − 2 ≤ −2`.
    VermaPair { low: GaussianRational, high: GaussianRational },
    /// The projective cover `P(low)`, a non-split extension of `M(low)` by `M(−low − 2)`.
    ProjectiveCover { low: GaussianRational },
}

impl std::fmt::Display for ComponentTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComponentTag::Verma { nu } => write!(f, "M({nu})"),
            ComponentTag::VermaPair { low, high } => write!(f, "M({high}) ⊕ M({low})"),
            ComponentTag::ProjectiveCover { low } => write!(f, "P({low})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentEvidence {
    pub singular_count_low: usize,
    pub singular_count_high: usize,
    /// The Casimir acts on the component with a nonzero nilpotent part.
    pub casimir_nilpotent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimaryComponentShape {
    pub tag: ComponentTag,
    pub evidence: ComponentEvidence,
}

/// The orbit whose component contains layer `k`.
pub fn character_orbit(spec: &TensorModuleSpec, k: usize) -> CharacterOrbit {
    let nu = spec.weight(k);
    let partner = &(-&nu) - &GaussianRational::from_integer(2);
    let k_partner = spec.layer_of(&partner);
    let (nu, partner, k, k_partner) = match k_partner {
        Some(kp) if kp < k as u64 => (partner, nu, kp as usize, Some(k as u64)),
        _ => (nu, partner, k, k_partner),
    };
    CharacterOrbit { nu, partner, partner_in_x: k_partner.is_some(), k, k_partner }
}

/// One orbit per distinct Casimir eigenvalue among layers `0..=cutoff`,
/// ordered by the representative's layer.
pub fn character_support(spec: &TensorModuleSpec) -> Vec<CharacterOrbit> {
    (0..=spec.cutoff())
        .map(|k| character_orbit(spec, k))
        .enumerate()
        .filter(|(k, orbit)| orbit.k == *k)
        .map(|(_, orbit)| orbit)
        .collect()
}

/// Basis (as columns) of `ker (C_k − c)^(k+1)` on layer `k`.
///
/// Powers are taken until the kernel stops growing; once
/// `ker A^j = ker A^(j+1)` the chain is stationary, so the result equals the
/// kernel of the `(k + 1)`-th power.
pub fn generalized_eigenspace(spec: &TensorModuleSpec, k: usize, c: &GaussianRational) -> Result<Matrix> {
    let shifted = spec.casimir_matrix(k)?.matrix.shift(c);
    let mut power = shifted.clone();
    let mut kernel = power.kernel();
    for _ in 1..=k {
        if kernel.cols() == 0 {
            break;
        }
        let next = power.mul(&shifted);
        let next_kernel = next.kernel();
        if next_kernel.cols() == kernel.cols() {
            break;
        }
        power = next;
        kernel = next_kernel;
    }
    Ok(kernel)
}

fn singular_within(spec: &TensorModuleSpec, k: usize, subspace: &Matrix) -> Result<Matrix> {
    if k == 0 || subspace.cols() == 0 {
        return Ok(subspace.clone());
    }
    let image = spec.raising_matrix(k)?.matrix.mul(subspace);
    Ok(subspace.mul(&image.kernel()))
}

/// Basis of the singular vectors (kernel of `e`) on layer `k`, optionally
/// intersected with the generalized Casimir eigenspace of `c`.
pub fn singular_vectors(spec: &TensorModuleSpec, k: usize, restrict_to: Option<&GaussianRational>) -> Result<Matrix> {
    spec.check_layer(k)?;
    let ambient = match restrict_to {
        Some(c) => generalized_eigenspace(spec, k, c)?,
        None => Matrix::identity(k + 1),
    };
    singular_within(spec, k, &ambient)
}

/// `dim Hom(M(−λ‴), M(−λ′) ⊗ M(−λ″))`, counted as singular vectors of weight
/// `−λ‴` in the tensor product. Zero unless `λ‴ − λ′ − λ″ ∈ 2ℕ`.
pub fn hom_dim(
    lam1: &GaussianRational,
    lam2: &GaussianRational,
    lam3: &GaussianRational,
    cutoff: usize,
) -> Result<usize> {
    let spec = TensorModuleSpec::new(-lam1, -lam2, cutoff)?;
    let Some(layer) = spec.layer_of(&-lam3) else {
        return Ok(0);
    };
    let layer = usize::try_from(layer).unwrap_or(usize::MAX);
    if layer > cutoff {
        return Err(Error::InsufficientCutoff { needed: layer, cutoff });
    }
    Ok(singular_vectors(&spec, layer, Some(&casimir_eigenvalue(&-lam3)))?.cols())
}

fn require_layers(spec: &TensorModuleSpec, orbit: &CharacterOrbit) -> Result<usize> {
    let needed = orbit.max_layer();
    if needed > spec.cutoff() as u64 {
        return Err(Error::InsufficientCutoff {
            needed: usize::try_from(needed).unwrap_or(usize::MAX),
            cutoff: spec.cutoff(),
        });
    }
    Ok(needed as usize)
}

/// Generalized eigenspaces of the orbit's eigenvalue on every layer it occupies.
fn component_layers(spec: &TensorModuleSpec, orbit: &CharacterOrbit) -> Result<Vec<(usize, Matrix)>> {
    let last = require_layers(spec, orbit)?;
    let c = orbit.casimir_value();
    (orbit.k..=last).map(|k| Ok((k, generalized_eigenspace(spec, k, &c)?))).collect()
}

fn semisimple_on(spec: &TensorModuleSpec, c: &GaussianRational, layers: &[(usize, Matrix)]) -> Result<bool> {
    for (k, basis) in layers {
        let shifted = spec.casimir_matrix(*k)?.matrix.shift(c);
        if !shifted.mul(basis).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the Casimir acts diagonalizably on the orbit's component, checked
/// on every layer from the representative's down to the deepest member's.
pub fn casimir_is_semisimple_on_component(spec: &TensorModuleSpec, orbit: &CharacterOrbit) -> Result<bool> {
    let layers = component_layers(spec, orbit)?;
    semisimple_on(spec, &orbit.casimir_value(), &layers)
}

pub fn classify_component(spec: &TensorModuleSpec, orbit: &CharacterOrbit) -> Result<PrimaryComponentShape> {
    let layers = component_layers(spec, orbit)?;
    let c = orbit.casimir_value();
    let semisimple = semisimple_on(spec, &c, &layers)?;
    let (first_k, first) = layers.first().expect("at least one layer");
    let (last_k, last) = layers.last().expect("at least one layer");
    let count_high = singular_within(spec, *first_k, first)?.cols();
    let count_low = singular_within(spec, *last_k, last)?.cols();
    let evidence = ComponentEvidence {
        singular_count_low: count_low,
        singular_count_high: count_high,
        casimir_nilpotent: !semisimple,
    };
    let tag = if !orbit.is_paired() {
        ComponentTag::Verma { nu: orbit.nu.clone() }
    } else {
        let (low, high) = (orbit.partner.clone(), orbit.nu.clone());
        match count_low {
            2 => ComponentTag::VermaPair { low, high },
            1 => ComponentTag::ProjectiveCover { low },
            n => {
                return Err(Error::Inconsistent(format!(
                    "{n} singular vectors of weight {} in the component of {}",
                    orbit.partner, orbit.nu
                )))
            }
        }
    };
    let projective = matches!(tag, ComponentTag::ProjectiveCover { .. });
    if semisimple == projective {
        return Err(Error::Inconsistent(format!(
            "Casimir semisimplicity ({semisimple}) disagrees with component {tag}"
        )));
    }
    Ok(PrimaryComponentShape { tag, evidence })
}
