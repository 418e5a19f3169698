//! Square matrices with exact entries and the two exact kernels:
//! a division-free characteristic polynomial (Berkowitz) and a
//! fraction-free determinant (Bareiss).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Coeff, IntPoly, Poly, RatPoly};

/// Square matrix over `T`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T: Coeff> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// The all-ones matrix.
    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_, _| T::one())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j).clone() + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j).clone() - other.get(i, j))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.n {
                acc = acc + self.get(i, k).clone() * other.get(k, j);
            }
            acc
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j).clone() * c)
    }

    /// Principal submatrix on the given (strictly increasing) indices.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |i, j| {
            self.get(indices[i], indices[j]).clone()
        })
    }

    /// Characteristic polynomial `det(zI - M)` by the Berkowitz algorithm:
    /// division-free, so it stays exact over any commutative coefficient ring.
    ///
    /// Coefficients are produced for the leading principal submatrices in
    /// turn; step `r` applies a lower-triangular Toeplitz matrix built from
    /// the corner entry and the Krylov products `row * A^k * col`.
    pub fn char_poly_berkowitz(&self) -> Poly<T> {
        let n = self.n;
        assert!(n >= 1, "characteristic polynomial needs order >= 1");
        // Descending coefficients of det(zI - M_r), starting with the 1x1 case.
        let mut c: Vec<T> = vec![T::one(), -self.get(0, 0).clone()];
        for r in 2..=n {
            let m = r - 1; // order of the previous leading submatrix
            let corner = self.get(m, m);
            // Krylov products s_k = row . A^k . col for k = 0..m-1.
            let mut krylov: Vec<T> = Vec::with_capacity(m);
            let mut v: Vec<T> = (0..m).map(|i| self.get(i, m).clone()).collect();
            for k in 0..m {
                let mut dot = T::zero();
                for j in 0..m {
                    dot = dot + self.get(m, j).clone() * &v[j];
                }
                krylov.push(dot);
                if k + 1 < m {
                    let mut next = Vec::with_capacity(m);
                    for i in 0..m {
                        let mut acc = T::zero();
                        for j in 0..m {
                            acc = acc + self.get(i, j).clone() * &v[j];
                        }
                        next.push(acc);
                    }
                    v = next;
                }
            }
            // Toeplitz application: entry (i, j) is f(i - j) with
            // f(0) = 1, f(1) = -corner, f(d) = -s_{d-2} for d >= 2.
            let mut next = Vec::with_capacity(r + 1);
            for i in 0..=r {
                let mut acc = T::zero();
                let j_lo = i.saturating_sub(r);
                let j_hi = i.min(c.len() - 1);
                for (j, cj) in c.iter().enumerate().take(j_hi + 1).skip(j_lo) {
                    acc = match i - j {
                        0 => acc + cj,
                        1 => acc - cj.clone() * corner,
                        d => acc - cj.clone() * &krylov[d - 2],
                    };
                }
                next.push(acc);
            }
            c = next;
        }
        c.reverse();
        Poly::from_coeffs(c)
    }
}

impl IntMatrix {
    pub fn from_i64(n: usize, rows: &[&[i64]]) -> Self {
        Self::from_fn(n, |i, j| BigInt::from(rows[i][j]))
    }

    /// Entry-wise lift into the rational matrix ring.
    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_fn(self.n, |i, j| BigRational::from_integer(self.get(i, j).clone()))
    }
}

/// Characteristic polynomial of an integer matrix, exact.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    m.char_poly_berkowitz()
}

/// Characteristic polynomial of a rational matrix, exact.
pub fn char_poly_rational(m: &RatMatrix) -> RatPoly {
    m.char_poly_berkowitz()
}

/// Exact determinant by Bareiss fraction-free elimination. Every interior
/// division is exact, so intermediate entries stay integral and bounded by
/// minors of the input.
pub fn det_exact(m: &IntMatrix) -> BigInt {
    let n = m.order();
    assert!(n >= 1, "determinant needs order >= 1");
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows.len(), rows)
    }

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Independent determinant oracle: signed permutation expansion.
    fn det_by_permutations(m: &IntMatrix) -> BigInt {
        let n = m.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = BigInt::zero();
        permute(&mut perm, 0, &mut |p, sign| {
            let mut prod = BigInt::one();
            for (i, &j) in p.iter().enumerate() {
                prod *= m.get(i, j);
            }
            if sign {
                total -= prod;
            } else {
                total += prod;
            }
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize], bool)) {
        if k == p.len() {
            let mut sign = false;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        sign = !sign;
                    }
                }
            }
            f(p, sign);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn char_poly_of_zero_matrix() {
        assert_eq!(char_poly(&IntMatrix::zeros(2)), ip(&[0, 0, 1]));
    }

    #[test]
    fn char_poly_of_three_cycle() {
        // Hand cofactor expansion of det(zI - A) for the 3-cycle gives z^3 - 1.
        let a = im(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(char_poly(&a), ip(&[-1, 0, 0, 1]));
    }

    #[test]
    fn char_poly_of_general_2x2() {
        let a = im(&[&[3, -2], &[7, 5]]);
        // z^2 - 8z + 29
        assert_eq!(char_poly(&a), ip(&[29, -8, 1]));
    }

    #[test]
    fn char_poly_order_one() {
        assert_eq!(char_poly(&im(&[&[4]])), ip(&[-4, 1]));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_exact(&IntMatrix::identity(3)), BigInt::one());
        let a = im(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(det_exact(&a), BigInt::one());
        assert_eq!(det_exact(&IntMatrix::zeros(4)), BigInt::zero());
    }

    #[test]
    fn det_needs_pivoting() {
        let a = im(&[&[0, 2, 1], &[1, 0, 3], &[4, 1, 0]]);
        assert_eq!(det_exact(&a), det_by_permutations(&a));
    }

    #[test]
    fn det_matches_permutation_oracle_on_random_matrices() {
        // Simple LCG so the test is self-contained and deterministic.
        let mut state: u64 = 0x1234_5678;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 19) as i64 - 9
        };
        for n in 1..=5 {
            for _ in 0..40 {
                let m = IntMatrix::from_fn(n, |_, _| BigInt::from(next()));
                assert_eq!(det_exact(&m), det_by_permutations(&m));
            }
        }
    }

    #[test]
    fn char_poly_constant_term_matches_determinant() {
        let mut state: u64 = 0x9e3779b9;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 11) as i64 - 5
        };
        for n in 1..=6 {
            for _ in 0..20 {
                let m = IntMatrix::from_fn(n, |_, _| BigInt::from(next()));
                // P(0) = det(-M) = (-1)^n det(M)
                let p0 = char_poly(&m).coeff(0);
                let d = det_exact(&m);
                let expected = if n % 2 == 0 { d } else { -d };
                assert_eq!(p0, expected);
            }
        }
    }

    #[test]
    fn char_poly_is_monic_of_full_degree() {
        let m = im(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let p = char_poly(&m);
        assert_eq!(p.degree(), Some(3));
        assert!(p.is_monic());
    }

    #[test]
    fn rational_kernel_agrees_with_integer_kernel_after_lift() {
        let m = im(&[&[0, 1, 1, 0], &[0, 0, 1, 1], &[0, 0, 0, 1], &[1, 0, 0, 0]]);
        let pi = char_poly(&m);
        let pr = char_poly_rational(&m.to_rational());
        assert_eq!(pr.to_integer().unwrap(), pi);
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        // 12x12 all-ones: char poly is z^11 (z - 12); with a twist matrix the
        // entries exceed i32 range quickly, exercising bigint paths.
        let m = IntMatrix::from_fn(12, |i, j| BigInt::from((i * 17 + j * 13) as i64 % 23 - 11));
        let p = char_poly(&m);
        assert!(p.is_monic());
        assert!(p.coeffs().iter().any(|c| c.abs() > BigInt::from(i64::MAX / 2) || c.bits() > 16));
    }
}
