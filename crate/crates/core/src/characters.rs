//! Verma-class bookkeeping in the Grothendieck group of category O for sl₂.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::{fusion_sets, DecompositionReport, Summand};
use crate::primary::ComponentTag;
use crate::scalar::GaussianRational;

/// A formal sum `Σ m_ν [M(ν)]` with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GrothendieckVector {
    entries: BTreeMap<GaussianRational, usize>,
    /// The true class has further terms that were cut off.
    pub truncated: bool,
}

impl GrothendieckVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_weights<I: IntoIterator<Item = GaussianRational>>(weights: I) -> Self {
        let mut v = Self::new();
        for w in weights {
            v.add_class(w, 1);
        }
        v
    }

    pub fn add_class(&mut self, weight: GaussianRational, multiplicity: usize) {
        if multiplicity > 0 {
            *self.entries.entry(weight).or_default() += multiplicity;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, m) in &other.entries {
            out.add_class(w.clone(), *m);
        }
        out.truncated |= other.truncated;
        out
    }

    pub fn multiplicity(&self, weight: &GaussianRational) -> usize {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GaussianRational, usize)> {
        self.entries.iter().map(|(w, m)| (w, *m))
    }

    /// Keep the classes `top − 2k` with `k ≤ cutoff`.
    pub fn restrict(&self, top: &GaussianRational, cutoff: usize) -> Self {
        let entries = self
            .entries
            .iter()
            .filter(|(w, _)| {
                let gap = top - *w;
                gap.is_in_two_n() && gap.to_i64().and_then(|g| (g / 2).to_usize()).is_some_and(|k| k <= cutoff)
            })
            .map(|(w, m)| (w.clone(), *m))
            .collect();
        Self { entries, truncated: true }
    }
}

#[derive(Serialize)]
struct ClassEntry<'a> {
    weight: &'a GaussianRational,
    multiplicity: usize,
}

impl Serialize for GrothendieckVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let classes: Vec<ClassEntry> =
            self.entries.iter().map(|(weight, &multiplicity)| ClassEntry { weight, multiplicity }).collect();
        let mut st = serializer.serialize_struct("GrothendieckVector", 2)?;
        st.serialize_field("classes", &classes)?;
        st.serialize_field("truncated", &self.truncated)?;
        st.end()
    }
}

/// Weight multiplicities of a finite-dimensional module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteDimCharacter {
    pub weights: Vec<(GaussianRational, usize)>,
}

impl FiniteDimCharacter {
    pub fn new(weights: Vec<(GaussianRational, usize)>) -> Self {
        Self { weights }
    }

    /// The simple module `L(n)`: weights `n, n − 2, …, −n`.
    pub fn simple(n: u32) -> Self {
        let n = i64::from(n);
        Self::new((0..=n).map(|j| (GaussianRational::from(n - 2 * j), 1)).collect())
    }

    pub fn dim(&self) -> usize {
        self.weights.iter().map(|(_, m)| m).sum()
    }
}

/// `[M(μ′) ⊗ M(μ″)] = Σ_k [M(μ′ + μ″ − 2k)]`, kept for `k ≤ cutoff`.
pub fn tensor_character(mu1: &GaussianRational, mu2: &GaussianRational, cutoff: usize) -> GrothendieckVector {
    let top = mu1 + mu2;
    let mut v = GrothendieckVector::from_weights((0..=cutoff).map(|k| &top - &GaussianRational::from(2 * k as i64)));
    v.truncated = true;
    v
}

/// `[M(μ) ⊗ N] = Σ_ν dim N_ν [M(μ + ν)]`.
pub fn verma_tensor_module_character(mu: &GaussianRational, n: &FiniteDimCharacter) -> GrothendieckVector {
    let mut v = GrothendieckVector::new();
    for (nu, m) in &n.weights {
        v.add_class(mu + nu, *m);
    }
    v
}

/// Whether the two tensor products have the same class; only the sum of the
/// weights matters.
pub fn grothendieck_equal(
    mu1: &GaussianRational,
    mu2: &GaussianRational,
    nu1: &GaussianRational,
    nu2: &GaussianRational,
) -> bool {
    mu1 + mu2 == nu1 + nu2
}

fn partner(nu: &GaussianRational) -> GaussianRational {
    &(-nu) - &GaussianRational::from(2)
}

/// Class of the primary component containing `M(ν)`: `[M(ν)] + [M(−ν − 2)]`
/// when `ν ∈ A′ ∪ A′*`, otherwise `[M(ν)]`.
pub fn component_character(
    mu1: &GaussianRational,
    mu2: &GaussianRational,
    nu: &GaussianRational,
    cutoff: usize,
) -> Result<GrothendieckVector> {
    let sets = fusion_sets(mu1, mu2, cutoff);
    if !sets.in_x(nu) {
        return Err(Error::NotInSupport { nu: Box::new(nu.clone()) });
    }
    let other = partner(nu);
    let linked = sets.linked.contains(nu) || sets.linked.contains(&other);
    Ok(GrothendieckVector::from_weights(if linked { vec![nu.clone(), other] } else { vec![nu.clone()] }))
}

/// Class of a component with the given shape.
pub fn tag_character(tag: &ComponentTag) -> GrothendieckVector {
    match tag {
        ComponentTag::Verma { nu } => GrothendieckVector::from_weights([nu.clone()]),
        ComponentTag::VermaPair { low, high } => GrothendieckVector::from_weights([low.clone(), high.clone()]),
        ComponentTag::ProjectiveCover { low } => GrothendieckVector::from_weights([low.clone(), partner(low)]),
    }
}

/// `[P(a)] = [M(a)] + [M(−a − 2)]`, `[M(b)]`.
pub fn summand_character(summand: &Summand) -> GrothendieckVector {
    match summand {
        Summand::ProjectiveCover { head } => tag_character(&ComponentTag::ProjectiveCover { low: head.clone() }),
        Summand::Verma { highest_weight } => GrothendieckVector::from_weights([highest_weight.clone()]),
    }
}

pub fn decomposition_character(report: &DecompositionReport) -> GrothendieckVector {
    let mut v = report.summands.iter().fold(GrothendieckVector::new(), |acc, s| acc.union(&summand_character(s)));
    v.truncated = true;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::predicted_decomposition;
    use crate::primary::{character_support, classify_component};
    use crate::weight_module::TensorModuleSpec;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn weights(v: &GrothendieckVector) -> Vec<(String, usize)> {
        v.iter().map(|(w, m)| (w.to_string(), m)).collect()
    }

    fn set(xs: &[&str]) -> GrothendieckVector {
        GrothendieckVector::from_weights(xs.iter().map(|s| q(s)))
    }

    #[test]
    fn tensor_character_examples() {
        let v = tensor_character(&q("0"), &q("0"), 3);
        assert_eq!(weights(&v), weights(&set(&["0", "-2", "-4", "-6"])));
        let v = tensor_character(&q("i"), &q("-i"), 2);
        assert_eq!(v.len(), 3);
        assert!(v.iter().all(|(_, m)| m == 1));
        assert!(v.truncated);
    }

    #[test]
    fn finite_dimensional_tensor_examples() {
        let v = verma_tensor_module_character(&q("3/2+i"), &FiniteDimCharacter::simple(0));
        assert_eq!(v, set(&["3/2+i"]));
        let v = verma_tensor_module_character(&q("1"), &FiniteDimCharacter::simple(3));
        assert_eq!(v, set(&["4", "2", "0", "-2"]));
        let v = verma_tensor_module_character(&q("0"), &FiniteDimCharacter::new(vec![(q("0"), 2)]));
        assert_eq!(v.multiplicity(&q("0")), 2);
    }

    #[test]
    fn grothendieck_equality_examples() {
        assert!(grothendieck_equal(&q("0"), &q("0"), &q("i"), &q("-i")));
        assert!(grothendieck_equal(&q("1"), &q("1"), &q("0"), &q("2")));
        assert!(!grothendieck_equal(&q("0"), &q("0"), &q("0"), &q("1")));
    }

    #[test]
    fn component_character_examples() {
        assert_eq!(component_character(&q("1"), &q("3"), &q("-4"), 6).unwrap(), set(&["-4", "2"]));
        assert_eq!(component_character(&q("0"), &q("0"), &q("-4"), 6).unwrap(), set(&["-4"]));
        assert_eq!(component_character(&q("0"), &q("0"), &q("0"), 6).unwrap(), set(&["0", "-2"]));
        assert_eq!(component_character(&q("1/2"), &q("0"), &q("-3/2"), 6).unwrap(), set(&["-3/2"]));
        assert_eq!(component_character(&q("1/2"), &q("1/2"), &q("-1"), 6).unwrap(), set(&["-1"]));
        assert_eq!(
            component_character(&q("0"), &q("0"), &q("1"), 6),
            Err(Error::NotInSupport { nu: Box::new(q("1")) })
        );
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&set(&["-2", "0"])).unwrap();
        assert_eq!(
            json,
            r#"{"classes":[{"weight":"-2","multiplicity":1},{"weight":"0","multiplicity":1}],"truncated":false}"#
        );
    }

    #[test]
    fn characters_agree_across_routes() {
        for (a, b) in [("0", "0"), ("i", "-i"), ("1", "3"), ("1/2", "-1/2"), ("5", "-1"), ("2", "2")] {
            let (mu1, mu2) = (q(a), q(b));
            let cutoff = 8;
            let top = &mu1 + &mu2;
            let expected = tensor_character(&mu1, &mu2, cutoff);

            let report = predicted_decomposition(&mu1, &mu2, cutoff, false).unwrap();
            assert_eq!(decomposition_character(&report).restrict(&top, cutoff), expected, "{a} {b}");

            let spec = TensorModuleSpec::new(mu1.clone(), mu2.clone(), cutoff).unwrap();
            let mut by_orbit = GrothendieckVector::new();
            for orbit in character_support(&spec) {
                let c = component_character(&mu1, &mu2, &orbit.nu, cutoff).unwrap();
                if orbit.max_layer() <= cutoff as u64 {
                    let shape = classify_component(&spec, &orbit).unwrap();
                    assert_eq!(tag_character(&shape.tag), c, "{a} {b} {}", orbit.nu);
                }
                by_orbit = by_orbit.union(&c);
            }
            assert_eq!(by_orbit.restrict(&top, cutoff), expected, "{a} {b}");
            assert_eq!(weights(&expected).len(), cutoff + 1);
        }
    }
}
