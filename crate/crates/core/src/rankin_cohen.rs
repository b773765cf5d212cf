//! The Rankin-Cohen bidifferential operator
//!
//! ```text
//! RC(f, g) = Σ_{j=0}^{ℓ} (−1)^j (λ′+ℓ−1)_j (λ″+ℓ−1)_{ℓ−j} / (j! (ℓ−j)!)
//!            · ∂^ℓ/∂z₁^{ℓ−j}∂z₂^j (f(z₁) g(z₂)) |_{z₁=z₂}
//! ```
//!
//! with `ℓ = (λ‴ − λ′ − λ″)/2` and `(x)_n` the descending factorial.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{DegreeTriple, Error, Result};
use crate::scalar::GaussianRational;

/// Dense univariate polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<GaussianRational>", into = "Vec<GaussianRational>")]
pub struct Poly1 {
    coeffs: Vec<GaussianRational>,
}

impl From<Vec<GaussianRational>> for Poly1 {
    fn from(coeffs: Vec<GaussianRational>) -> Self {
        Self::new(coeffs)
    }
}

impl From<Poly1> for Vec<GaussianRational> {
    fn from(p: Poly1) -> Self {
        p.coeffs
    }
}

impl Poly1 {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: GaussianRational, degree: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> GaussianRational {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> Self {
        self.nth_derivative(1)
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(order)
            .map(|(n, c)| c * &GaussianRational::from(n as i64).descending_factorial(order))
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|n| &self.coeff(n) + &other.coeff(n)).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (m, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (n, b) in other.coeffs.iter().enumerate() {
                coeffs[m + n] += &(a * b);
            }
        }
        Self::new(coeffs)
    }
}

/// Dense bivariate polynomial; `coeffs[m][n]` multiplies `z₁^m z₂^n`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly2 {
    coeffs: Vec<Vec<GaussianRational>>,
}

impl Poly2 {
    pub fn new(coeffs: Vec<Vec<GaussianRational>>) -> Self {
        Self { coeffs }
    }

    /// `f(z₁) g(z₂)`.
    pub fn from_product(f: &Poly1, g: &Poly1) -> Self {
        Self::new(f.coeffs.iter().map(|a| g.coeffs.iter().map(|b| a * b).collect()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..rows)
            .map(|m| {
                let (a, b) = (self.coeffs.get(m), other.coeffs.get(m));
                let cols = a.map_or(0, Vec::len).max(b.map_or(0, Vec::len));
                (0..cols)
                    .map(|n| {
                        let x = a.and_then(|r| r.get(n)).cloned().unwrap_or_default();
                        let y = b.and_then(|r| r.get(n)).cloned().unwrap_or_default();
                        &x + &y
                    })
                    .collect()
            })
            .collect();
        Self::new(coeffs)
    }

    /// `∂^{d1}/∂z₁^{d1} ∂^{d2}/∂z₂^{d2}`.
    pub fn partial(&self, d1: usize, d2: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(d1)
            .map(|(m, row)| {
                let fm = GaussianRational::from(m as i64).descending_factorial(d1);
                row.iter()
                    .enumerate()
                    .skip(d2)
                    .map(|(n, c)| &(c * &fm) * &GaussianRational::from(n as i64).descending_factorial(d2))
                    .collect()
            })
            .collect();
        Self::new(coeffs)
    }

    /// Substitute `z₁ = z₂ = z`.
    pub fn restrict_diagonal(&self) -> Poly1 {
        let len = self.coeffs.iter().enumerate().map(|(m, row)| m + row.len()).max().unwrap_or(0);
        let mut out = vec![GaussianRational::zero(); len];
        for (m, row) in self.coeffs.iter().enumerate() {
            for (n, c) in row.iter().enumerate() {
                out[m + n] += c;
            }
        }
        Poly1::new(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RCOperator {
    pub lam1: GaussianRational,
    pub lam2: GaussianRational,
    pub ell: usize,
    pub coeffs: Vec<GaussianRational>,
}

impl RCOperator {
    /// `λ‴ = λ′ + λ″ + 2ℓ`.
    pub fn degree(&self) -> GaussianRational {
        &(&self.lam1 + &self.lam2) + &GaussianRational::from(2 * self.ell as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The bracket with its two arguments exchanged.
    pub fn swapped(&self) -> Self {
        rc_coefficients(&self.lam2, &self.lam1, self.ell)
    }

    /// `Σ_j coeffs[j] · f^{(ℓ−j)} · g^{(j)}`.
    pub fn apply(&self, f: &Poly1, g: &Poly1) -> Poly1 {
        self.coeffs.iter().enumerate().fold(Poly1::zero(), |acc, (j, c)| {
            if c.is_zero() {
                return acc;
            }
            acc.add(&f.nth_derivative(self.ell - j).mul(&g.nth_derivative(j)).scale(c))
        })
    }

    /// The operator on an arbitrary `F(z₁, z₂)`, followed by `z₁ = z₂`.
    pub fn apply_bivariate(&self, h: &Poly2) -> Poly1 {
        let mut total = Poly2::default();
        for (j, c) in self.coeffs.iter().enumerate() {
            let term = h.partial(self.ell - j, j);
            let scaled = Poly2::new(term.coeffs.iter().map(|row| row.iter().map(|x| x * c).collect()).collect());
            total = total.add(&scaled);
        }
        total.restrict_diagonal()
    }
}

fn factorial(n: usize) -> GaussianRational {
    GaussianRational::from(n as i64).descending_factorial(n)
}

pub fn rc_coefficients(lam1: &GaussianRational, lam2: &GaussianRational, ell: usize) -> RCOperator {
    let shift = GaussianRational::from(ell as i64 - 1);
    let a = lam1 + &shift;
    let b = lam2 + &shift;
    let coeffs = (0..=ell)
        .map(|j| {
            let numer = &a.descending_factorial(j) * &b.descending_factorial(ell - j);
            let denom = &factorial(j) * &factorial(ell - j);
            let c = numer.checked_div(&denom).expect("factorials are nonzero");
            if j % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    RCOperator { lam1: lam1.clone(), lam2: lam2.clone(), ell, coeffs }
}

/// The bracket of bidegree `(λ′, λ″)` landing in degree `λ‴`.
pub fn rc_operator(lam1: &GaussianRational, lam2: &GaussianRational, lam3: &GaussianRational) -> Result<RCOperator> {
    let gap = &(lam3 - lam1) - lam2;
    let ell = gap.is_in_two_n().then(|| (gap.as_integer()? / 2u32).try_into().ok()).flatten().ok_or_else(|| {
        Error::DegreeMismatch(Box::new(DegreeTriple { lam1: lam1.clone(), lam2: lam2.clone(), lam3: lam3.clone() }))
    })?;
    Ok(rc_coefficients(lam1, lam2, ell))
}

pub fn rc_is_zero(lam1: &GaussianRational, lam2: &GaussianRational, lam3: &GaussianRational) -> Result<bool> {
    Ok(rc_operator(lam1, lam2, lam3)?.is_zero())
}
