//! The truncated tensor product `M(μ′) ⊗ M(μ″)` of two sl₂ Verma modules.
//!
//! Layer `k` is the weight space of weight `μ′ + μ″ − 2k`. It has basis
//! `f^a v′ ⊗ f^b v″` with `a + b = k`, ordered by ascending `a`, so it is
//! `(k + 1)`-dimensional. On one factor
//!
//! ```text
//! e · f^a v = a(μ − a + 1) f^(a−1) v,   f · f^a v = f^(a+1) v,   h · f^a v = (μ − 2a) f^a v
//! ```
//!
//! and `𝔰𝔩₂` acts on the tensor product through the coproduct
//! `x(u ⊗ w) = xu ⊗ w + u ⊗ xw`.
//!
//! The Casimir element is normalized as `C = ef + fe + ½h²`, which acts on a
//! highest-weight vector of weight `ν` by `ν(ν + 2)/2`. Layer matrices use the
//! equivalent form `C = 2fe + h + ½h²` so that layer `k` needs no data from
//! layer `k + 1`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;

/// Integral weight sums beyond this magnitude are rejected so that layer
/// indices always fit in a machine word.
pub const MAX_INTEGRAL_SUM: i64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorModuleSpec {
    mu1: GaussianRational,
    mu2: GaussianRational,
    cutoff: usize,
}

/// One weight space of the tensor product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorLayer {
    pub k: usize,
    /// `(a, b)` stands for `f^a v′ ⊗ f^b v″`.
    pub basis: Vec<(usize, usize)>,
    pub weight: GaussianRational,
}

impl TensorLayer {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Matrix of an operator from layer `source` to layer `target`, in the fixed
/// basis order of both layers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerMatrix {
    pub source: usize,
    pub target: usize,
    pub matrix: Matrix,
}

fn raise_coefficient(mu: &GaussianRational, a: usize) -> GaussianRational {
    // a(μ − a + 1)
    let a = GaussianRational::from_integer(a as i64);
    &a * &(&(mu - &a) + &GaussianRational::from_integer(1))
}

impl TensorModuleSpec {
    pub fn new(mu1: GaussianRational, mu2: GaussianRational, cutoff: usize) -> Result<Self> {
        let sum = &mu1 + &mu2;
        if sum.is_integer() && sum.to_i64().is_none_or(|s| s.abs() > MAX_INTEGRAL_SUM) {
            return Err(Error::ParameterOutOfRange(format!(
                "integral weight sum {sum} exceeds {MAX_INTEGRAL_SUM} in magnitude"
            )));
        }
        Ok(Self { mu1, mu2, cutoff })
    }

    pub fn mu1(&self) -> &GaussianRational {
        &self.mu1
    }

    pub fn mu2(&self) -> &GaussianRational {
        &self.mu2
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// `μ′ + μ″`, the highest weight of the tensor product.
    pub fn total_weight(&self) -> GaussianRational {
        &self.mu1 + &self.mu2
    }

    /// Weight `μ′ + μ″ − 2k` of layer `k`; defined for every `k`.
    pub fn weight(&self, k: usize) -> GaussianRational {
        &self.total_weight() - &GaussianRational::from_integer(2 * k as i64)
    }

    /// The layer holding weight `nu`, if `nu ∈ μ′ + μ″ − 2ℕ` (ignoring the cutoff).
    pub fn layer_of(&self, nu: &GaussianRational) -> Option<u64> {
        let diff = &self.total_weight() - nu;
        if !diff.is_in_two_n() {
            return None;
        }
        diff.to_i64().map(|d| (d / 2) as u64)
    }

    pub fn check_layer(&self, k: usize) -> Result<()> {
        if k > self.cutoff {
            Err(Error::LayerOutOfRange { k, cutoff: self.cutoff })
        } else {
            Ok(())
        }
    }

    pub fn layer(&self, k: usize) -> Result<TensorLayer> {
        self.check_layer(k)?;
        Ok(TensorLayer { k, basis: (0..=k).map(|a| (a, k - a)).collect(), weight: self.weight(k) })
    }

    /// Action of `e`, layer `k` → layer `k − 1`. Shape `k × (k + 1)`.
    pub fn raising_matrix(&self, k: usize) -> Result<LayerMatrix> {
        self.check_layer(k)?;
        if k == 0 {
            return Err(Error::NoLayerAbove);
        }
        let mut m = Matrix::zeros(k, k + 1);
        for a in 0..=k {
            let b = k - a;
            // f^a v′ ⊗ f^b v″ ↦ a(μ′−a+1) f^(a−1) v′ ⊗ f^b v″ + b(μ″−b+1) f^a v′ ⊗ f^(b−1) v″
            if a >= 1 {
                m[(a - 1, a)] = raise_coefficient(&self.mu1, a);
            }
            if b >= 1 {
                m[(a, a)] = raise_coefficient(&self.mu2, b);
            }
        }
        Ok(LayerMatrix { source: k, target: k - 1, matrix: m })
    }

    /// Action of `f`, layer `k` → layer `k + 1`. Shape `(k + 2) × (k + 1)`.
    pub fn lowering_matrix(&self, k: usize) -> Result<LayerMatrix> {
        self.check_layer(k + 1)?;
        let mut m = Matrix::zeros(k + 2, k + 1);
        let one = GaussianRational::from_integer(1);
        for a in 0..=k {
            m[(a + 1, a)] = one.clone();
            m[(a, a)] = one.clone();
        }
        Ok(LayerMatrix { source: k, target: k + 1, matrix: m })
    }

    /// The scalar by which `h` acts on layer `k`.
    pub fn cartan_value(&self, k: usize) -> Result<GaussianRational> {
        self.check_layer(k)?;
        Ok(self.weight(k))
    }

    /// Casimir `C = 2fe + h + ½h²` on layer `k`. Square of size `k + 1`.
    pub fn casimir_matrix(&self, k: usize) -> Result<LayerMatrix> {
        let lambda = self.cartan_value(k)?;
        let diagonal = &lambda + &(&(&lambda * &lambda) * &GaussianRational::from_fraction(1, 2));
        let mut m = Matrix::scalar(k + 1, &diagonal);
        if k > 0 {
            let fe = self.lowering_matrix(k - 1)?.matrix.mul(&self.raising_matrix(k)?.matrix);
            m = m.add(&fe.scale(&GaussianRational::from_integer(2)));
        }
        Ok(LayerMatrix { source: k, target: k, matrix: m })
    }
}

/// Outcome of checking the `𝔰𝔩₂` relations between layers `k` and `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LayerRelations {
    /// `ef − fe = h` on layer `k`.
    pub commutator: bool,
    /// `C f = f C` from layer `k` to `k + 1`.
    pub casimir_commutes_with_f: bool,
    /// `C e = e C` from layer `k + 1` to `k`.
    pub casimir_commutes_with_e: bool,
}

impl LayerRelations {
    pub fn all(&self) -> bool {
        self.commutator && self.casimir_commutes_with_f && self.casimir_commutes_with_e
    }
}

impl TensorModuleSpec {
    /// Needs `k + 1 ≤ cutoff`.
    pub fn layer_relations(&self, k: usize) -> Result<LayerRelations> {
        let f = self.lowering_matrix(k)?.matrix;
        let e_above = self.raising_matrix(k + 1)?.matrix;
        let mut commutator = e_above.mul(&f);
        if k > 0 {
            let fe = self.lowering_matrix(k - 1)?.matrix.mul(&self.raising_matrix(k)?.matrix);
            commutator = commutator.sub(&fe);
        }
        let c_here = self.casimir_matrix(k)?.matrix;
        let c_below = self.casimir_matrix(k + 1)?.matrix;
        Ok(LayerRelations {
            commutator: commutator == Matrix::scalar(k + 1, &self.cartan_value(k)?),
            casimir_commutes_with_f: c_below.mul(&f) == f.mul(&c_here),
            casimir_commutes_with_e: c_here.mul(&e_above) == e_above.mul(&c_below),
        })
    }
}

/// Eigenvalue `ν(ν + 2)/2` of the Casimir on a highest-weight vector of weight `ν`.
///
/// Satisfies `c(ν) = c(−ν − 2)`.
pub fn casimir_eigenvalue(nu: &GaussianRational) -> GaussianRational {
    let shifted = nu + &GaussianRational::from_integer(2);
    let product = nu * &shifted;
    if product.is_zero() {
        return product;
    }
    &product * &GaussianRational::from_fraction(1, 2)
}
