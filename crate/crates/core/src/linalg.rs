//! Dense matrices over ℚ(i) and exact kernels.
//!
//! Kernels are computed by fraction-free (Bareiss) elimination over the
//! Gaussian integers ℤ[i]: each row is first cleared of denominators, then
//! every elimination step divides exactly by the previous pivot. Pivoting is
//! deterministic (leftmost nonzero column, lowest-index row), and the kernel
//! basis is read off the echelon form with one free variable set to 1 and the
//! others to 0, so reported bases are reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn scalar(n: usize, value: &GaussianRational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = value.clone();
        }
        m
    }

    /// Panics when the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    /// Builds an `n × columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, columns: &[Vec<GaussianRational>]) -> Self {
        let mut m = Self::zeros(n, columns.len());
        for (j, column) in columns.iter().enumerate() {
            assert_eq!(column.len(), n, "column length");
            for (i, x) in column.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<GaussianRational>> + '_ {
        (0..self.cols).map(|j| self.column(j))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (l, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.row(l).iter().enumerate() {
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in sum");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in difference");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, factor: &GaussianRational) -> Matrix {
        let data = self.data.iter().map(|a| a * factor).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self − c·Id` for a square matrix.
    pub fn shift(&self, c: &GaussianRational) -> Matrix {
        assert_eq!(self.rows, self.cols, "shift of a non-square matrix");
        let mut out = self.clone();
        for i in 0..self.rows {
            out[(i, i)] -= c;
        }
        out
    }

    pub fn rank(&self) -> usize {
        fraction_free_echelon(self).pivots.len()
    }

    /// Basis of the right kernel, as the columns of a `cols × nullity` matrix.
    pub fn kernel(&self) -> Matrix {
        fraction_free_echelon(self).kernel()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;

    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Serialized as an array of rows, each an array of scalar strings.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

/// Element of ℤ[i] used during elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussianInteger {
    re: BigInt,
    im: BigInt,
}

impl GaussianInteger {
    fn zero() -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self { re: &self.re * &rhs.re, im: BigInt::zero() };
        }
        Self { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }

    /// Division known to be exact in ℤ[i]. Panics otherwise: a remainder here
    /// means the elimination invariant is broken.
    fn div_exact(&self, d: &Self) -> Self {
        if d.im.is_zero() {
            let (q_re, r_re) = self.re.div_rem(&d.re);
            let (q_im, r_im) = self.im.div_rem(&d.re);
            assert!(r_re.is_zero() && r_im.is_zero(), "inexact Bareiss division");
            return Self { re: q_re, im: q_im };
        }
        let norm = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let (q_re, r_re) = re.div_rem(&norm);
        let (q_im, r_im) = im.div_rem(&norm);
        assert!(r_re.is_zero() && r_im.is_zero(), "inexact Bareiss division");
        Self { re: q_re, im: q_im }
    }

    fn to_scalar(&self) -> GaussianRational {
        GaussianRational::new(BigRational::from_integer(self.re.clone()), BigRational::from_integer(self.im.clone()))
    }
}

/// Row-echelon form over ℤ[i] produced by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<GaussianInteger>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    pub fn kernel(&self) -> Matrix {
        let n = self.cols;
        let rank = self.pivots.len();
        let rows: Vec<Vec<GaussianRational>> =
            self.rows[..rank].iter().map(|row| row.iter().map(GaussianInteger::to_scalar).collect()).collect();
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut x = vec![GaussianRational::zero(); n];
            x[free] = GaussianRational::one();
            for r in (0..rank).rev() {
                let p = self.pivots[r];
                let mut acc = GaussianRational::zero();
                for c in p + 1..n {
                    if !x[c].is_zero() && !rows[r][c].is_zero() {
                        acc += &(&rows[r][c] * &x[c]);
                    }
                }
                if !acc.is_zero() {
                    x[p] = -acc.checked_div(&rows[r][p]).expect("pivot is nonzero");
                }
            }
            basis.push(x);
        }
        Matrix::from_columns(n, &basis)
    }
}

fn lcm_of_denominators(row: &[GaussianRational]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.re().denom()).lcm(x.im().denom()))
}

fn integral_row(row: &[GaussianRational]) -> Vec<GaussianInteger> {
    let l = BigRational::from_integer(lcm_of_denominators(row));
    row.iter()
        .map(|x| {
            let y = x.scale(&l);
            GaussianInteger { re: y.re().to_integer(), im: y.im().to_integer() }
        })
        .collect()
}

/// Fraction-free row reduction of `m` to echelon form.
pub fn fraction_free_echelon(m: &Matrix) -> Echelon {
    let mut rows: Vec<Vec<GaussianInteger>> = (0..m.rows()).map(|i| integral_row(m.row(i))).collect();
    let n = m.cols();
    let mut pivots = Vec::new();
    let mut prev = GaussianInteger { re: BigInt::one(), im: BigInt::zero() };
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (upper, lower) = rows.split_at_mut(r + 1);
        let pivot_row = &upper[r];
        let pivot = &pivot_row[col];
        for row in lower.iter_mut() {
            let factor = std::mem::replace(&mut row[col], GaussianInteger::zero());
            for c in col + 1..n {
                let scaled = pivot.mul(&row[c]);
                let updated = if factor.is_zero() { scaled } else { scaled.sub(&factor.mul(&pivot_row[c])) };
                row[c] = if updated.is_zero() { updated } else { updated.div_exact(&prev) };
            }
        }
        prev = pivot.clone();
        pivots.push(col);
        r += 1;
    }
    Echelon { cols: n, rows, pivots }
}

/// Column-stacks two bases living in the same ambient space.
pub fn hstack(a: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(a.rows(), b.rows(), "row mismatch in hstack");
    let mut out = Matrix::zeros(a.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out[(i, j)] = a[(i, j)].clone();
        }
        for j in 0..b.cols() {
            out[(i, a.cols() + j)] = b[(i, j)].clone();
        }
    }
    out
}
