//! Univariate polynomials with exact coefficients.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so structural equality coincides with mathematical equality. The zero
//! polynomial is the empty coefficient list.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar: reduced fraction with positive denominator.
pub type RatScalar = BigRational;

/// Coefficient ring bound shared by the polynomial and matrix kernels.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Sub<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
{
}

/// Univariate polynomial over `T`, canonical ascending coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * z^deg`.
    pub fn monomial(c: T, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// The variable `z`.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Ascending coefficient slice (canonical form, no trailing zeros).
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k) + other.coeff(k))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k) - other.coeff(k))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = std::mem::replace(&mut coeffs[i + j], T::zero()) + a.clone() * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant(T::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// First formal derivative.
    pub fn derivative_once(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| {
                let mut m = T::zero();
                for _ in 0..k {
                    m = m + c;
                }
                m
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// `m`-th formal derivative.
    pub fn derivative(&self, m: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..m {
            p = p.derivative_once();
        }
        p
    }

    /// Composition `self(q)` by Horner's rule.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(q).add(&Self::constant(c.clone()));
        }
        acc
    }
}

impl IntPoly {
    /// Lifts into the rational polynomial ring.
    pub fn to_rational(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Evaluation at a rational point.
    pub fn eval_rational(&self, x: &RatScalar) -> RatScalar {
        let mut acc = RatScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// `P(-z-1)`, the reflect-and-shift substitution. An involution.
    pub fn reflect_shift(&self) -> IntPoly {
        let arg = IntPoly::from_coeffs(vec![BigInt::from(-1), BigInt::from(-1)]);
        self.compose(&arg)
    }

    /// Machine form: ascending decimal coefficients, e.g. `[-24,-28,-42,-21,-14,0,0,1]`.
    pub fn machine_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "[0]".to_string();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Coefficients as decimal strings, ascending (for machine-readable reports).
    pub fn coeff_strings(&self) -> Vec<String> {
        if self.coeffs.is_empty() {
            return vec!["0".to_string()];
        }
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl RatPoly {
    /// Converts to an integer polynomial; fails if any coefficient has a
    /// denominator other than 1.
    pub fn to_integer(&self) -> Result<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient);
            }
            out.push(c.to_integer());
        }
        Ok(IntPoly::from_coeffs(out))
    }

    pub fn scale_rational(&self, c: &RatScalar) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Composition with the affine argument `(a z + b) / d`.
    pub fn compose_affine(&self, a: &RatScalar, b: &RatScalar, d: &RatScalar) -> RatPoly {
        let arg = RatPoly::from_coeffs(vec![b / d, a / d]);
        self.compose(&arg)
    }
}

/// Substitutes `z -> (a z + b) / d` into `p` and scales by `c`; the result
/// must have integer coefficients, otherwise the scaling does not clear the
/// denominators and the call is rejected.
pub fn affine_substitute(
    p: &IntPoly,
    a: &BigInt,
    b: &BigInt,
    d: &BigInt,
    c: &RatScalar,
) -> Result<IntPoly> {
    if !d.is_positive() {
        return Err(Error::NonPositiveDenominator);
    }
    let q = p.to_rational().compose_affine(
        &BigRational::from_integer(a.clone()),
        &BigRational::from_integer(b.clone()),
        &BigRational::from_integer(d.clone()),
    );
    q.scale_rational(c).to_integer()
}

fn fmt_term(f: &mut fmt::Formatter<'_>, coeff: &BigInt, deg: usize, first: bool) -> fmt::Result {
    let mag = coeff.abs();
    if first {
        if coeff.is_negative() {
            write!(f, "-")?;
        }
    } else if coeff.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    match deg {
        0 => write!(f, "{mag}"),
        1 => {
            if mag.is_one() {
                write!(f, "z")
            } else {
                write!(f, "{mag}z")
            }
        }
        _ => {
            if mag.is_one() {
                write!(f, "z^{deg}")
            } else {
                write!(f, "{mag}z^{deg}")
            }
        }
    }
}

impl fmt::Display for IntPoly {
    /// Human form: descending powers with explicit signs, `z` as the variable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            fmt_term(f, c, deg, first)?;
            first = false;
        }
        Ok(())
    }
}

/// Parses an ascending-coefficient machine form like `[-24,-28,0,1]`.
pub fn parse_machine_poly(text: &str) -> Option<IntPoly> {
    let inner = text.trim().strip_prefix('[')?.strip_suffix(']')?;
    if inner.trim().is_empty() {
        return Some(IntPoly::zero());
    }
    let mut coeffs = Vec::new();
    for part in inner.split(',') {
        coeffs.push(part.trim().parse::<BigInt>().ok()?);
    }
    Some(IntPoly::from_coeffs(coeffs))
}
