//! Closed-form structure of `M(μ′) ⊗ M(μ″)`.
//!
//! With `X = μ′ + μ″ − 2ℕ`, the tensor product is
//! `⊕_{a∈A} P(a) ⊕ ⊕_{b∈B} M(b)` where
//!
//! ```text
//! A = ∅                              if μ′ + μ″ ∉ ℕ
//!   = X ∩ [−|μ′ − μ″|, −2]           if μ′, μ″ ∈ ℕ
//!   = X ∩ [−μ′ − μ″ − 2, −2]         otherwise
//! A* = {−a − 2 : a ∈ A},   B = X ∖ (A ∪ A*)
//! ```
//!
//! `A′ = X ∩ [−μ′ − μ″ − 2, −2]` (empty unless `μ′ + μ″ ∈ ℕ`) indexes the
//! primary components of length two; `A′ ∖ A` gives the ones that split as
//! `M(ν) ⊕ M(−ν − 2)`.
//!
//! This module also hosts the predicates derived from that description: the
//! multiplicity-two criterion for a triple `(λ′, λ″, λ‴)`, the isomorphism test
//! for two tensor products, the Clebsch-Gordan summand criterion and the
//! self-duality predicates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::primary::{character_orbit, PrimaryComponentShape};
use crate::primary::{character_support, classify_component, hom_dim, CharacterOrbit, ComponentTag};
use crate::rankin_cohen::rc_is_zero;
use crate::scalar::GaussianRational;
use crate::weight_module::TensorModuleSpec;

/// The integers `top, top − 2, …, bottom`, or nothing.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightProgression {
    bounds: Option<(BigInt, BigInt)>,
}

impl WeightProgression {
    pub fn empty() -> Self {
        Self { bounds: None }
    }

    /// Panics if `top` and `bottom` differ in parity.
    pub fn new(top: BigInt, bottom: BigInt) -> Self {
        assert!((&top - &bottom).is_even(), "progression bounds differ in parity");
        if top < bottom {
            Self::empty()
        } else {
            Self { bounds: Some((top, bottom)) }
        }
    }

    /// `(s − 2ℕ) ∩ [lo, hi]`.
    pub fn coset_interval(s: &BigInt, lo: &BigInt, hi: &BigInt) -> Self {
        let hi = hi.min(s).clone();
        let top = if (s - &hi).is_even() { hi } else { hi - 1 };
        let bottom = if (s - lo).is_even() { lo.clone() } else { lo + 1 };
        Self::new(top, bottom)
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn count(&self) -> BigInt {
        match &self.bounds {
            Some((top, bottom)) => (top - bottom) / 2 + 1,
            None => BigInt::zero(),
        }
    }

    pub fn top(&self) -> Option<GaussianRational> {
        self.bounds.as_ref().map(|(t, _)| t.clone().into())
    }

    pub fn bottom(&self) -> Option<GaussianRational> {
        self.bounds.as_ref().map(|(_, b)| b.clone().into())
    }

    pub fn contains(&self, x: &GaussianRational) -> bool {
        let (Some((top, bottom)), Some(n)) = (&self.bounds, x.as_integer()) else {
            return false;
        };
        &n <= top && &n >= bottom && (top - &n).is_even()
    }

    /// Elements in descending order.
    pub fn iter(&self) -> impl Iterator<Item = GaussianRational> + '_ {
        let mut next = self.bounds.as_ref().map(|(t, _)| t.clone());
        std::iter::from_fn(move || {
            let (_, bottom) = self.bounds.as_ref()?;
            let current = next.take()?;
            if &current > bottom {
                next = Some(&current - 2);
            }
            Some(current.into())
        })
    }

    /// `{−x − 2 : x ∈ self}`.
    pub fn mirror(&self) -> Self {
        match &self.bounds {
            Some((top, bottom)) => Self::new(-bottom - 2, -top - 2),
            None => Self::empty(),
        }
    }

    /// Set difference, as at most two progressions (above and below `other`).
    pub fn minus(&self, other: &Self) -> Vec<Self> {
        let Some((top, bottom)) = &self.bounds else {
            return Vec::new();
        };
        let Some((o_top, o_bottom)) = &other.bounds else {
            return vec![self.clone()];
        };
        if !(top - o_top).is_even() || o_top < bottom || o_bottom > top {
            return vec![self.clone()];
        }
        [
            Self::new(top.clone(), (o_top + 2i32).max(bottom.clone())),
            Self::new((o_bottom - 2i32).min(top.clone()), bottom.clone()),
        ]
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect()
    }
}

/// Serialized as the array of its elements, descending.
impl Serialize for WeightProgression {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(None)?;
        for x in self.iter() {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

/// The index sets of the closed-form decomposition. `B` is infinite and is
/// kept only for layers `0..=cutoff`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionSets {
    /// Top of `X = top − 2ℕ`.
    #[serde(rename = "X_description", serialize_with = "serialize_coset")]
    pub top_weight: GaussianRational,
    /// `A`: weights `a` contributing a projective cover `P(a)`.
    #[serde(rename = "A")]
    pub projective_heads: WeightProgression,
    /// `A* = {−a − 2}`: the Verma submodules of those projective covers.
    #[serde(rename = "A_star")]
    pub projective_socles: WeightProgression,
    /// `A′`: lower members of length-two primary components.
    #[serde(rename = "A_prime")]
    pub linked: WeightProgression,
    /// `B` restricted to layers `0..=cutoff`, in layer order.
    #[serde(rename = "B")]
    pub verma_weights: Vec<GaussianRational>,
    pub cutoff: usize,
    pub truncated: bool,
}

fn serialize_coset<S: Serializer>(top: &GaussianRational, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = serializer.serialize_struct("Coset", 2)?;
    st.serialize_field("top", top)?;
    st.serialize_field("step", &-2)?;
    st.end()
}

impl FusionSets {
    pub fn in_x(&self, nu: &GaussianRational) -> bool {
        (&self.top_weight - nu).is_in_two_n()
    }

    /// Membership in the full (untruncated) `B`.
    pub fn in_b(&self, nu: &GaussianRational) -> bool {
        self.in_x(nu) && !self.projective_heads.contains(nu) && !self.projective_socles.contains(nu)
    }

    /// `B ∩ ℕ`, exact and finite.
    pub fn natural_verma_weights(&self) -> Vec<WeightProgression> {
        let Some(s) = self.top_weight.as_integer().filter(|s| !s.is_negative()) else {
            return Vec::new();
        };
        let naturals = WeightProgression::coset_interval(&s, &BigInt::zero(), &s);
        naturals.minus(&self.projective_socles)
    }
}

fn natural_pair(mu1: &GaussianRational, mu2: &GaussianRational) -> Option<(BigInt, BigInt)> {
    Some((mu1.as_integer().filter(|n| !n.is_negative())?, mu2.as_integer().filter(|n| !n.is_negative())?))
}

/// `A′` for the pair: `X ∩ [−s − 2, −2]` when `s = μ′ + μ″ ∈ ℕ`.
fn linked_weights(mu1: &GaussianRational, mu2: &GaussianRational) -> WeightProgression {
    match (mu1 + mu2).as_integer().filter(|s| !s.is_negative()) {
        Some(s) => WeightProgression::coset_interval(&s, &(-&s - 2), &BigInt::from(-2)),
        None => WeightProgression::empty(),
    }
}

/// `A` for the pair.
pub fn projective_heads(mu1: &GaussianRational, mu2: &GaussianRational) -> WeightProgression {
    let linked = linked_weights(mu1, mu2);
    match natural_pair(mu1, mu2) {
        Some((a, b)) => {
            let s = &a + &b;
            WeightProgression::coset_interval(&s, &-(a - b).abs(), &BigInt::from(-2))
        }
        None => linked,
    }
}

pub fn fusion_sets(mu1: &GaussianRational, mu2: &GaussianRational, cutoff: usize) -> FusionSets {
    let top_weight = mu1 + mu2;
    let projective_heads = projective_heads(mu1, mu2);
    let projective_socles = projective_heads.mirror();
    let verma_weights = (0..=cutoff)
        .map(|k| &top_weight - &GaussianRational::from_integer(2 * k as i64))
        .filter(|nu| !projective_heads.contains(nu) && !projective_socles.contains(nu))
        .collect();
    FusionSets {
        linked: linked_weights(mu1, mu2),
        top_weight,
        projective_heads,
        projective_socles,
        verma_weights,
        cutoff,
        truncated: true,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Summand {
    ProjectiveCover { head: GaussianRational },
    Verma { highest_weight: GaussianRational },
}

impl std::fmt::Display for Summand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Summand::ProjectiveCover { head } => write!(f, "P({head})"),
            Summand::Verma { highest_weight } => write!(f, "M({highest_weight})"),
        }
    }
}

/// Closed-form prediction for one primary component next to what the
/// brute-force oracle found. `observed` is `None` when the component reaches
/// past the cutoff.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCheck {
    pub orbit: CharacterOrbit,
    pub expected: ComponentTag,
    pub observed: Option<PrimaryComponentShape>,
    pub agrees: Option<bool>,
}

impl OrbitCheck {
    fn new(orbit: CharacterOrbit, expected: ComponentTag, observed: Option<PrimaryComponentShape>) -> Self {
        let agrees = observed.as_ref().map(|o| o.tag == expected);
        Self { orbit, expected, observed, agrees }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub mu1: GaussianRational,
    pub mu2: GaussianRational,
    pub cutoff: usize,
    pub fusion_sets: FusionSets,
    /// `P(a)` for `a ∈ A` (descending), then `M(b)` for retained `b ∈ B` in layer order.
    pub summands: Vec<Summand>,
    pub oracle: Option<Vec<OrbitCheck>>,
}

impl DecompositionReport {
    /// `None` without verification; otherwise whether every checked component agrees.
    pub fn oracle_verified(&self) -> Option<bool> {
        self.oracle.as_ref().map(|checks| checks.iter().all(|c| c.agrees != Some(false)))
    }

    pub fn first_disagreement(&self) -> Option<&OrbitCheck> {
        self.oracle.as_ref()?.iter().find(|c| c.agrees == Some(false))
    }
}

/// The component type the closed form predicts for an orbit.
pub fn expected_component(sets: &FusionSets, orbit: &CharacterOrbit) -> ComponentTag {
    if !orbit.is_paired() {
        return ComponentTag::Verma { nu: orbit.nu.clone() };
    }
    let low = orbit.partner.clone();
    if sets.projective_heads.contains(&low) {
        ComponentTag::ProjectiveCover { low }
    } else {
        ComponentTag::VermaPair { low, high: orbit.nu.clone() }
    }
}

fn layer_needed(spec: &TensorModuleSpec, nu: &GaussianRational) -> usize {
    spec.layer_of(nu).map_or(usize::MAX, |k| usize::try_from(k).unwrap_or(usize::MAX))
}

pub fn predicted_decomposition(
    mu1: &GaussianRational,
    mu2: &GaussianRational,
    cutoff: usize,
    verify: bool,
) -> Result<DecompositionReport> {
    let spec = TensorModuleSpec::new(mu1.clone(), mu2.clone(), cutoff)?;
    let sets = fusion_sets(mu1, mu2, cutoff);
    if let Some(deepest) = sets.projective_heads.bottom() {
        let needed = layer_needed(&spec, &deepest);
        if needed > cutoff {
            return Err(Error::InsufficientCutoff { needed, cutoff });
        }
    }
    let summands = sets
        .projective_heads
        .iter()
        .map(|head| Summand::ProjectiveCover { head })
        .chain(sets.verma_weights.iter().map(|b| Summand::Verma { highest_weight: b.clone() }))
        .collect();
    let oracle = if verify {
        let mut checks = Vec::new();
        for orbit in character_support(&spec) {
            let expected = expected_component(&sets, &orbit);
            let observed =
                if orbit.max_layer() <= cutoff as u64 { Some(classify_component(&spec, &orbit)?) } else { None };
            checks.push(OrbitCheck::new(orbit, expected, observed));
        }
        Some(checks)
    } else {
        None
    };
    Ok(DecompositionReport { mu1: mu1.clone(), mu2: mu2.clone(), cutoff, fusion_sets: sets, summands, oracle })
}

/// The integral criterion for `dim Hom(M(−λ‴), M(−λ′) ⊗ M(−λ″)) = 2`:
/// `λ′, λ″, λ‴ ∈ ℤ`, `λ′ + λ″ + λ‴ ≤ 2` and `λ‴ ≥ |λ′ − λ″| + 2`.
/// False whenever `λ‴ − λ′ − λ″ ∉ 2ℕ`.
pub fn multiplicity_two_condition(lam1: &GaussianRational, lam2: &GaussianRational, lam3: &GaussianRational) -> bool {
    if !(&(lam3 - lam1) - lam2).is_in_two_n() {
        return false;
    }
    let (Some(a), Some(b), Some(c)) = (lam1.as_integer(), lam2.as_integer(), lam3.as_integer()) else {
        return false;
    };
    &a + &b + &c <= BigInt::from(2) && c >= (&a - &b).abs() + 2
}

/// Four characterizations of the multiplicity-two phenomenon for one triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityTwoCheck {
    pub hom_dimension: usize,
    /// `dim Hom = 2`.
    pub hom_is_two: bool,
    pub integral_condition: bool,
    pub bracket_vanishes: bool,
    /// `λ‴ ≥ 2` and the component at `−λ‴` is `M(−λ‴) ⊕ M(λ‴ − 2)`.
    pub component_splits: bool,
    pub component: PrimaryComponentShape,
}

impl MultiplicityTwoCheck {
    pub fn consistent(&self) -> bool {
        let v = self.hom_is_two;
        self.integral_condition == v && self.bracket_vanishes == v && self.component_splits == v
    }
}

pub fn multiplicity_two_crosscheck(
    lam1: &GaussianRational,
    lam2: &GaussianRational,
    lam3: &GaussianRational,
    cutoff: usize,
) -> Result<MultiplicityTwoCheck> {
    let bracket_vanishes = rc_is_zero(lam1, lam2, lam3)?;
    let hom_dimension = hom_dim(lam1, lam2, lam3, cutoff)?;
    let spec = TensorModuleSpec::new(-lam1, -lam2, cutoff)?;
    let nu = -lam3;
    let orbit = character_orbit(&spec, layer_needed(&spec, &nu));
    let component = classify_component(&spec, &orbit)?;
    let two = GaussianRational::from_integer(2);
    let at_least_two = lam3.as_integer().is_some_and(|n| n >= BigInt::from(2));
    let split = ComponentTag::VermaPair { low: nu.clone(), high: lam3 - &two };
    Ok(MultiplicityTwoCheck {
        hom_dimension,
        hom_is_two: hom_dimension == 2,
        integral_condition: multiplicity_two_condition(lam1, lam2, lam3),
        bracket_vanishes,
        component_splits: at_least_two && component.tag == split,
        component,
    })
}

/// sl₂ anti-dominance with `ρ = 1`: `λ ∉ ℕ`, i.e. `M(λ)` is simple.
pub fn is_antidominant(lam: &GaussianRational) -> bool {
    !lam.is_natural()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IsoCheck {
    /// Equal sums, and each pair contains an anti-dominant weight.
    pub hypothesis_met: bool,
    pub isomorphic: bool,
}

/// Whether `M(μ′) ⊗ M(μ″) ≅ M(ν′) ⊗ M(ν″)`: equal sums give the same `X`,
/// and then the summand lists agree exactly when the sets `A` do.
pub fn tensor_iso_check(
    mu1: &GaussianRational,
    mu2: &GaussianRational,
    nu1: &GaussianRational,
    nu2: &GaussianRational,
) -> IsoCheck {
    let same_sum = mu1 + mu2 == nu1 + nu2;
    let hypothesis_met =
        same_sum && (is_antidominant(mu1) || is_antidominant(mu2)) && (is_antidominant(nu1) || is_antidominant(nu2));
    let isomorphic = same_sum && projective_heads(mu1, mu2) == projective_heads(nu1, nu2);
    IsoCheck { hypothesis_met, isomorphic }
}

/// Whether `M(ν)`, `ν ∈ ℕ`, is a direct summand of `M(μ′) ⊗ M(μ″)`:
/// `μ′, μ″ ∈ ℕ`, `|μ′ − μ″| ≤ ν ≤ μ′ + μ″` and `ν ≡ μ′ + μ″ (mod 2)`.
pub fn clebsch_gordan_summand(nu: &GaussianRational, mu1: &GaussianRational, mu2: &GaussianRational) -> bool {
    let (Some(n), Some((a, b))) = (nu.as_integer().filter(|n| !n.is_negative()), natural_pair(mu1, mu2)) else {
        return false;
    };
    let s = &a + &b;
    (&a - &b).abs() <= n && n <= s && (&s - &n).is_even()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomWitness {
    pub nu: GaussianRational,
    /// `dim Hom(M(−ν − 2), M(μ′) ⊗ M(μ″))`.
    pub hom_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub multiplicity_free: bool,
    pub self_dual: bool,
    pub no_reducible_verma_summand: bool,
    /// `B ∩ ℕ`, descending.
    pub natural_verma_weights: Vec<GaussianRational>,
    pub witnesses: Vec<HomWitness>,
}

/// Multiplicity-freeness, self-duality and absence of reducible Verma summands,
/// all decided from the summand list. With `witness_cutoff`, every `ν ∈ B ∩ ℕ`
/// whose witness layer fits is checked by the oracle for
/// `dim Hom(M(−ν − 2), ·) = 2`.
pub fn duality_predicates(
    mu1: &GaussianRational,
    mu2: &GaussianRational,
    witness_cutoff: Option<usize>,
) -> Result<DualityReport> {
    let sets = fusion_sets(mu1, mu2, 0);
    let natural: Vec<GaussianRational> =
        sets.natural_verma_weights().iter().flat_map(|p| p.iter().collect::<Vec<_>>()).collect();
    // P(a) and simple M(b) are self-dual, M(b) with b ∈ ℕ is not.
    let self_dual = natural.is_empty();
    // b ∈ B ∩ ℕ forces −b − 2 ∈ B, so M(−b − 2) maps into two summands
    let multiplicity_free = natural.iter().all(|b| !sets.in_b(&(&(-b) - &GaussianRational::from_integer(2))));
    let no_reducible_verma_summand = natural.is_empty();
    let mut witnesses = Vec::new();
    if let Some(cutoff) = witness_cutoff {
        let spec = TensorModuleSpec::new(mu1.clone(), mu2.clone(), cutoff)?;
        for nu in &natural {
            let target = &(-nu) - &GaussianRational::from_integer(2);
            if layer_needed(&spec, &target) > cutoff {
                continue;
            }
            let lam3 = nu + &GaussianRational::from_integer(2);
            let hom_dimension = hom_dim(&-mu1, &-mu2, &lam3, cutoff)?;
            witnesses.push(HomWitness { nu: nu.clone(), hom_dimension });
        }
    }
    Ok(DualityReport {
        multiplicity_free,
        self_dual,
        no_reducible_verma_summand,
        natural_verma_weights: natural,
        witnesses,
    })
}
