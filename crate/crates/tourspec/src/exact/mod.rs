//! Exact arithmetic: arbitrary-precision integer/rational polynomials,
//! matrices, and the characteristic-polynomial and determinant kernels.
//!
//! Everything here is exact; there is no floating point anywhere in the
//! crate. Characteristic polynomials come from the division-free Berkowitz
//! algorithm, determinants from Bareiss fraction-free elimination, so the
//! two are independent routes that cross-check each other.

mod matrix;
mod poly;

pub use matrix::{char_poly, char_poly_rational, det_exact, IntMatrix, Matrix, RatMatrix};
pub use poly::{affine_substitute, parse_machine_poly, Coeff, IntPoly, Poly, RatPoly, RatScalar};

use num_bigint::BigInt;
use num_traits::One;

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}
