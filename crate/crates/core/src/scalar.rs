//! Exact arithmetic in the Gaussian rationals ℚ(i).
//!
//! Every weight parameter and every matrix entry in the crate is a
//! [`GaussianRational`]. Both components are arbitrary-precision reduced
//! fractions, so equality is structural and nothing is ever rounded.
//!
//! The text form accepted by [`parse_scalar`] is `[±]p[/q][±r[/s]i]`, plus
//! purely imaginary forms such as `i`, `-i` or `3/2i`. [`GaussianRational`]'s
//! `Display` produces the canonical spelling of the same grammar.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::error::{Error, Result};

/// An element `re + im·i` of ℚ(i).
///
/// Ordering is lexicographic on `(re, im)`. It has no algebraic meaning and
/// exists so that weights can key ordered maps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(BigRational::from_integer(n.into()))
    }

    pub fn from_fraction(numer: i64, denom: i64) -> Self {
        Self::real(BigRational::new(numer.into(), denom.into()))
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_real() {
            return Ok(Self::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self { re: &self.re * factor, im: &self.im * factor }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// The integer value, when `self ∈ ℤ`.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.is_real() && self.re.is_integer()).then(|| self.re.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    pub fn is_integer(&self) -> bool {
        self.is_real() && self.re.is_integer()
    }

    /// `self ∈ ℕ = {0, 1, 2, …}`.
    pub fn is_natural(&self) -> bool {
        self.is_integer() && !self.re.is_negative()
    }

    /// `self ∈ −2ℕ = {0, −2, −4, …}`.
    pub fn is_in_minus_two_n(&self) -> bool {
        self.as_integer().is_some_and(|n| !n.is_positive() && n.is_even())
    }

    /// `self ∈ 2ℕ = {0, 2, 4, …}`.
    pub fn is_in_two_n(&self) -> bool {
        self.as_integer().is_some_and(|n| !n.is_negative() && n.is_even())
    }

    pub fn integrality(&self) -> Integrality {
        Integrality {
            is_integer: self.is_integer(),
            is_natural: self.is_natural(),
            is_in_minus_two_n: self.is_in_minus_two_n(),
        }
    }

    /// Falling factorial `x(x−1)⋯(x−n+1)`, equal to 1 for `n = 0`.
    pub fn descending_factorial(&self, n: usize) -> Self {
        let mut acc = Self::one();
        let mut factor = self.clone();
        let one = Self::one();
        for _ in 0..n {
            acc = &acc * &factor;
            if acc.is_zero() {
                break;
            }
            factor -= &one;
        }
        acc
    }
}

/// Result of the integrality tests on a scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Integrality {
    pub is_integer: bool,
    pub is_natural: bool,
    pub is_in_minus_two_n: bool,
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(n: BigInt) -> Self {
        Self::real(BigRational::from_integer(n))
    }
}

impl<'a> Add<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: &'a GaussianRational) -> GaussianRational {
        if self.is_zero() || rhs.is_zero() {
            return GaussianRational::zero();
        }
        match (self.is_real(), rhs.is_real()) {
            (true, true) => GaussianRational::real(&self.re * &rhs.re),
            (true, false) => rhs.scale(&self.re),
            (false, true) => self.scale(&rhs.re),
            (false, false) => GaussianRational {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

fn write_imaginary(f: &mut fmt::Formatter<'_>, magnitude: &BigRational) -> fmt::Result {
    if !magnitude.is_one() {
        write_ratio(f, magnitude)?;
    }
    f.write_str("i")
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_ratio(f, &self.re);
        }
        if !self.re.is_zero() {
            write_ratio(f, &self.re)?;
            f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
        } else if self.im.is_negative() {
            f.write_str("-")?;
        }
        write_imaginary(f, &self.im.abs())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Malformed scalar text. `position` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse scalar {input:?} at position {position}: {message}")]
pub struct ParseScalarError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

struct Term {
    value: BigRational,
    imaginary: bool,
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, message: &str) -> std::result::Result<T, ParseScalarError> {
        Err(ParseScalarError { input: self.text.to_owned(), position: self.pos, message: message.to_owned() })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> std::result::Result<BigInt, ParseScalarError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a digit");
        }
        Ok(self.text[start..self.pos].parse().expect("ascii digits"))
    }

    fn term(&mut self, sign_required: bool) -> std::result::Result<Term, ParseScalarError> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ if sign_required => return self.fail("expected '+' or '-'"),
            _ => false,
        };
        let mut value = if self.peek() == Some(b'i') {
            BigRational::one()
        } else {
            let numer = self.digits()?;
            if self.peek() == Some(b'/') {
                self.pos += 1;
                let denom = self.digits()?;
                if denom.is_zero() {
                    self.pos -= 1;
                    return self.fail("zero denominator");
                }
                BigRational::new(numer, denom)
            } else {
                BigRational::from_integer(numer)
            }
        };
        let imaginary = self.peek() == Some(b'i');
        if imaginary {
            self.pos += 1;
        }
        if negative {
            value = -value;
        }
        Ok(Term { value, imaginary })
    }
}

pub fn parse_scalar(text: &str) -> std::result::Result<GaussianRational, ParseScalarError> {
    let mut p = Parser { text, bytes: text.as_bytes(), pos: 0 };
    if text.is_empty() {
        return p.fail("empty input");
    }
    let first = p.term(false)?;
    if first.imaginary {
        if p.peek().is_some() {
            return p.fail("unexpected trailing input");
        }
        return Ok(GaussianRational::new(BigRational::zero(), first.value));
    }
    if p.peek().is_none() {
        return Ok(GaussianRational::real(first.value));
    }
    let second = p.term(true)?;
    if !second.imaginary {
        return p.fail("expected an imaginary part ending in 'i'");
    }
    if p.peek().is_some() {
        return p.fail("unexpected trailing input");
    }
    Ok(GaussianRational::new(first.value, second.value))
}

pub fn format_scalar(x: &GaussianRational) -> String {
    x.to_string()
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_scalar(&text).map_err(serde::de::Error::custom)
    }
}
