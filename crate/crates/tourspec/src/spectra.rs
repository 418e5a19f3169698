//! Spectral monomorphy: deciders, closed-form spectra of doubly regular
//! tournaments, and the exact identities linking a tournament's spectrum,
//! its subtournament spectra, and its skew spectrum.
//!
//! A tournament is k-spectrally monomorphic when all k-vertex principal
//! submatrices of its adjacency matrix share one characteristic polynomial;
//! k-skew-spectral monomorphy is the same property for `S = A - A^T`. The
//! deciders stream subsets in colexicographic order and short-circuit on the
//! first mismatch, which is what makes exhaustive censuses affordable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{
    binomial, char_poly, char_poly_rational, det_exact, factorial, IntMatrix, IntPoly, RatMatrix,
    RatPoly, RatScalar,
};
use crate::skew::skew_matrix;
use crate::tournament::{k_subsets, Tournament, VertexSet};

/// Which matrix the spectra come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumMode {
    Adjacency,
    Skew,
}

impl SpectrumMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumMode::Adjacency => "adjacency",
            SpectrumMode::Skew => "skew",
        }
    }

    pub fn matrix(self, t: &Tournament) -> IntMatrix {
        match self {
            SpectrumMode::Adjacency => t.adjacency_matrix(),
            SpectrumMode::Skew => skew_matrix(t),
        }
    }
}

/// Streams `(subset, characteristic polynomial)` for every k-subset in
/// colexicographic order. Never materializes the full list.
pub fn principal_char_polys(
    t: &Tournament,
    k: usize,
    mode: SpectrumMode,
) -> Result<impl Iterator<Item = (VertexSet, IntPoly)>> {
    let n = t.n();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let m = mode.matrix(t);
    Ok(k_subsets(n, k).map(move |alpha| {
        let p = char_poly(&m.principal_submatrix(&alpha.to_indices()));
        (alpha, p)
    }))
}

/// Two equal-size subsets whose principal submatrices have different
/// characteristic polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub first: VertexSet,
    pub second: VertexSet,
    pub first_poly: IntPoly,
    pub second_poly: IntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerdictOutcome {
    Monomorphic { common: IntPoly },
    Distinct(Witness),
}

/// Result of a monomorphy decision at a fixed subset size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomorphyVerdict {
    pub mode: SpectrumMode,
    pub k: usize,
    pub outcome: VerdictOutcome,
}

impl MonomorphyVerdict {
    pub fn is_monomorphic(&self) -> bool {
        matches!(self.outcome, VerdictOutcome::Monomorphic { .. })
    }

    pub fn common(&self) -> Option<&IntPoly> {
        match &self.outcome {
            VerdictOutcome::Monomorphic { common } => Some(common),
            VerdictOutcome::Distinct(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            VerdictOutcome::Monomorphic { .. } => None,
            VerdictOutcome::Distinct(w) => Some(w),
        }
    }

    /// Machine-readable document: mode, k, flag, and either the common
    /// polynomial or the witness subsets with both polynomials.
    pub fn to_json(&self) -> serde_json::Value {
        let mut doc = json!({
            "mode": self.mode.as_str(),
            "k": self.k,
            "monomorphic": self.is_monomorphic(),
        });
        match &self.outcome {
            VerdictOutcome::Monomorphic { common } => {
                doc["common"] = json!(common.coeff_strings());
            }
            VerdictOutcome::Distinct(w) => {
                doc["witness"] = json!({
                    "first": w.first.to_indices(),
                    "second": w.second.to_indices(),
                    "first_poly": w.first_poly.coeff_strings(),
                    "second_poly": w.second_poly.coeff_strings(),
                });
            }
        }
        doc
    }
}

/// Decides k-spectral (or k-skew-spectral) monomorphy, short-circuiting on
/// the first subset whose polynomial differs from the colex-first one.
pub fn spectral_monomorphy(
    t: &Tournament,
    k: usize,
    mode: SpectrumMode,
) -> Result<MonomorphyVerdict> {
    spectral_monomorphy_jobs(t, k, mode, 1)
}

/// As [`spectral_monomorphy`], evaluating subset batches on `jobs` worker
/// threads. The verdict is identical for every job count: workers report
/// candidate mismatches and the earliest subset in colex order wins.
pub fn spectral_monomorphy_jobs(
    t: &Tournament,
    k: usize,
    mode: SpectrumMode,
    jobs: usize,
) -> Result<MonomorphyVerdict> {
    let n = t.n();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let m = mode.matrix(t);
    let poly_of = |alpha: VertexSet| char_poly(&m.principal_submatrix(&alpha.to_indices()));

    let mut subsets = k_subsets(n, k);
    let first = subsets.next().expect("k <= n gives at least one subset");
    let first_poly = poly_of(first);

    let verdict = |outcome| MonomorphyVerdict { mode, k, outcome };
    if jobs <= 1 {
        for alpha in subsets {
            let p = poly_of(alpha);
            if p != first_poly {
                return Ok(verdict(VerdictOutcome::Distinct(Witness {
                    first,
                    second: alpha,
                    first_poly,
                    second_poly: p,
                })));
            }
        }
        return Ok(verdict(VerdictOutcome::Monomorphic { common: first_poly }));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    const BATCH: usize = 4096;
    let mut batch = Vec::with_capacity(BATCH);
    loop {
        batch.clear();
        batch.extend(subsets.by_ref().take(BATCH));
        if batch.is_empty() {
            break;
        }
        let mismatch = pool.install(|| {
            batch
                .par_iter()
                .enumerate()
                .filter_map(|(i, &alpha)| {
                    let p = poly_of(alpha);
                    (p != first_poly).then_some((i, alpha, p))
                })
                .min_by_key(|(i, _, _)| *i)
        });
        if let Some((_, alpha, p)) = mismatch {
            return Ok(verdict(VerdictOutcome::Distinct(Witness {
                first,
                second: alpha,
                first_poly,
                second_poly: p,
            })));
        }
    }
    Ok(verdict(VerdictOutcome::Monomorphic { common: first_poly }))
}

/// `(k!/n!) * P_A^{(n-k)}` as an exact rational polynomial: the average of
/// the characteristic polynomials over all k-subsets, recovered from
/// derivatives alone. Always defined.
pub fn derivative_subset_average(t: &Tournament, k: usize) -> Result<RatPoly> {
    let n = t.n();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let d = char_poly(&t.adjacency_matrix()).derivative(n - k);
    let divisor = BigRational::from_integer(factorial(n) / factorial(k));
    Ok(d.to_rational().scale_rational(&divisor.recip()))
}

/// `(k!/n!) * P_A^{(n-k)}` asserted integral. For a k-spectrally
/// monomorphic tournament this is exactly the common polynomial of all
/// k-subsets and the division is exact; otherwise it is the subset average,
/// which can have non-integral coefficients — that case reports an error
/// (and certifies non-monomorphy).
pub fn common_poly_via_derivative(t: &Tournament, k: usize) -> Result<IntPoly> {
    let n = t.n();
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let p = char_poly(&t.adjacency_matrix());
    let d = p.derivative(n - k);
    let divisor = factorial(n) / factorial(k);
    let mut coeffs = Vec::with_capacity(d.coeffs().len());
    for c in d.coeffs() {
        let (q, r) = c.div_rem(&divisor);
        if !r.is_zero() {
            return Err(Error::NonIntegerCoefficient);
        }
        coeffs.push(q);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Sum of `det M[alpha]` over all p-subsets `alpha` containing `beta`.
/// For a k-spectrally monomorphic matrix this depends only on `|beta|`
/// (for `|beta| <= n-k`, `p <= k`), which is the engine behind the
/// classification of monomorphic tournaments.
pub fn superset_minor_sum(m: &IntMatrix, beta: VertexSet, p: usize) -> Result<BigInt> {
    let n = m.order();
    let b = beta.len();
    if let Some(max) = beta.max_element() {
        if max >= n {
            return Err(Error::VertexOutOfRange { index: max, n });
        }
    }
    if p < b || p > n {
        return Err(Error::SizeOutOfRange { p, lo: b, hi: n });
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !beta.contains(v)).collect();
    let mut total = BigInt::zero();
    for extra in k_subsets(rest.len(), p - b) {
        let alpha = extra.iter().map(|i| rest[i]).chain(beta.iter()).collect::<VertexSet>();
        total += det_exact(&m.principal_submatrix(&alpha.to_indices()));
    }
    Ok(total)
}

/// The three closed-form spectra of a doubly regular tournament on
/// `n = 4t+3` vertices: the full characteristic polynomial and the common
/// polynomials of all one-vertex- and two-vertex-deleted subtournaments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublyRegularPolys {
    /// `(z - (2t+1)) (z^2 + z + t + 1)^{2t+1}`, degree n.
    pub full: IntPoly,
    /// `(z^2 + z + t + 1)^{2t} (z^2 - 2t z - t)`, degree n-1.
    pub one_deleted: IntPoly,
    /// `(z^2 + z + t + 1)^{2t-1} (z^3 - (2t-1) z^2 - (2t-1) z - t)`, degree n-2.
    pub two_deleted: IntPoly,
}

/// Builds the closed forms by exact multiplication. All three products are
/// integral because `n = 4t+3` turns every printed fraction into an integer.
pub fn doubly_regular_polys(n: usize) -> Result<DoublyRegularPolys> {
    if n < 7 || n % 4 != 3 {
        return Err(Error::NotDoublyRegularOrder { n });
    }
    let t = ((n - 3) / 4) as i64;
    let quad = IntPoly::from_coeffs(vec![BigInt::from(t + 1), BigInt::one(), BigInt::one()]);
    let full = IntPoly::from_coeffs(vec![BigInt::from(-(2 * t + 1)), BigInt::one()])
        .mul(&quad.pow(2 * t as usize + 1));
    let one_deleted = quad.pow(2 * t as usize).mul(&IntPoly::from_coeffs(vec![
        BigInt::from(-t),
        BigInt::from(-2 * t),
        BigInt::one(),
    ]));
    let two_deleted = quad.pow(2 * t as usize - 1).mul(&IntPoly::from_coeffs(vec![
        BigInt::from(-t),
        BigInt::from(-(2 * t - 1)),
        BigInt::from(-(2 * t - 1)),
        BigInt::one(),
    ]));
    Ok(DoublyRegularPolys {
        full,
        one_deleted,
        two_deleted,
    })
}

/// Characteristic polynomial of the transitive tournament with its extremal
/// arc reversed: `z^n - sum_{k=3}^{n} C(n-2, k-2) z^{n-k}`.
pub fn rn_poly(n: usize) -> Result<IntPoly> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, min: 3 });
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    for k in 3..=n {
        coeffs[n - k] = -binomial(n - 2, k - 2);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// For regular tournaments, the full spectrum is determined by any single
/// vertex-deleted spectrum:
/// `4 P_A(z) = (2z - n + 1) [ (n + 2z + 1) P_{A_i}(z) + (n - 2z - 1) P_{A_i}(-z-1) ]`.
/// Returns whether the identity holds exactly (the doubled form keeps every
/// term in integer polynomials).
pub fn regular_deletion_identity(t: &Tournament, i: usize) -> Result<bool> {
    if !t.is_regular() {
        return Err(Error::NotRegular);
    }
    let n = t.n() as i64;
    let pa = char_poly(&t.adjacency_matrix());
    let pai = char_poly(&t.delete_vertex(i)?.adjacency_matrix());
    let lhs = pa.scale(&BigInt::from(4));
    let plus = IntPoly::from_coeffs(vec![BigInt::from(n + 1), BigInt::from(2)]);
    let minus = IntPoly::from_coeffs(vec![BigInt::from(n - 1), BigInt::from(-2)]);
    let front = IntPoly::from_coeffs(vec![BigInt::from(1 - n), BigInt::from(2)]);
    let rhs = front.mul(&plus.mul(&pai).add(&minus.mul(&pai.reflect_shift())));
    Ok(lhs == rhs)
}

/// Checks the rank-one update identities for `A + lambda J`:
/// `P_{A+lambda J}(z) = (lambda+1) P_A(z) - (-1)^n lambda P_A(-z-1)` always,
/// and `(z - (n-1)/2) P_{A+lambda J}(z) = (z - n lambda - (n-1)/2) P_A(z)`
/// when the tournament is regular.
pub fn lambda_shift_identity(t: &Tournament, lambda: &RatScalar) -> bool {
    let n = t.n();
    let a = t.adjacency_matrix().to_rational();
    let shifted = a.add(&RatMatrix::ones(n).scale(lambda));
    let lhs = char_poly_rational(&shifted);

    let pa = char_poly(&t.adjacency_matrix());
    let pa_rat = pa.to_rational();
    let reflected = pa.reflect_shift().to_rational();
    let sign = if n % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    let rhs = pa_rat
        .scale_rational(&(lambda + BigRational::one()))
        .sub(&reflected.scale_rational(&(sign * lambda)));
    if lhs != rhs {
        return false;
    }

    if t.is_regular() {
        let half = BigRational::new(BigInt::from(n as i64 - 1), BigInt::from(2));
        let left_lin = RatPoly::from_coeffs(vec![-half.clone(), BigRational::one()]);
        let shift = BigRational::from_integer(BigInt::from(n as i64)) * lambda + half;
        let right_lin = RatPoly::from_coeffs(vec![-shift, BigRational::one()]);
        if left_lin.mul(&lhs) != right_lin.mul(&pa_rat) {
            return false;
        }
    }
    true
}

/// Transfers an adjacency characteristic polynomial to the skew spectrum:
/// `P_S(z) = 2^{n-1} [ P((z-1)/2) + (-1)^n P(-(z+1)/2) ]`.
///
/// The sign is `(-1)^n`: with `(-1)^{n-1}` the leading terms cancel and the
/// result is not even monic (see the verification suite, which demonstrates
/// the failure on the 3-cycle). Integrality of the result certifies that the
/// input was the spectrum of a 0/1 tournament matrix.
pub fn skew_from_adjacency_poly(p: &IntPoly, n: usize) -> Result<IntPoly> {
    if p.degree() != Some(n) || !p.is_monic() {
        return Err(Error::NotMonicOfDegree { expected: n });
    }
    let pr = p.to_rational();
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let plus = pr.compose_affine(&one, &(-one.clone()), &two);
    let minus = pr.compose_affine(&(-one.clone()), &(-one), &two);
    let combined = if n % 2 == 0 {
        plus.add(&minus)
    } else {
        plus.sub(&minus)
    };
    let scale = BigRational::from_integer(BigInt::one() << (n - 1));
    combined.scale_rational(&scale).to_integer()
}

/// Cross-multiplied form of the regular-tournament difference identity
/// between deleted-vertex spectra and deleted-vertex skew spectra:
/// `(2^n z + 2^{n-1}) (P_{A_j} - P_{A_i}) = (2z - n + 1) (P_{S_j}(2z+1) - P_{S_i}(2z+1))`.
///
/// This orientation follows from the deletion identity: with
/// `D = P_{A_j} - P_{A_i}` one gets
/// `(n-2z-1) (P_{S_j}(2z+1) - P_{S_i}(2z+1)) = -2^{n-1} (2z+1) D`,
/// and it is confirmed exactly on every regular instance with unequal
/// deletions. The reciprocal orientation (factors swapped between the two
/// sides) fails whenever both sides are nonzero; the verification suite
/// demonstrates that on the order-7 counterexample.
pub fn skew_difference_identity(t: &Tournament, i: usize, j: usize) -> Result<bool> {
    if !t.is_regular() {
        return Err(Error::NotRegular);
    }
    if i == j {
        return Err(Error::SameVertex);
    }
    let n = t.n();
    for v in [i, j] {
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, n });
        }
    }
    let pa_i = char_poly(&t.delete_vertex(i)?.adjacency_matrix());
    let pa_j = char_poly(&t.delete_vertex(j)?.adjacency_matrix());

    let s = skew_matrix(t);
    let keep = |v: usize| -> Vec<usize> { (0..n).filter(|&u| u != v).collect() };
    let arg = IntPoly::from_coeffs(vec![BigInt::one(), BigInt::from(2)]); // 2z + 1
    let ps_i = char_poly(&s.principal_submatrix(&keep(i))).compose(&arg);
    let ps_j = char_poly(&s.principal_submatrix(&keep(j))).compose(&arg);

    let lhs = IntPoly::from_coeffs(vec![BigInt::one() << (n - 1), BigInt::one() << n])
        .mul(&pa_j.sub(&pa_i));
    let rhs = IntPoly::from_coeffs(vec![BigInt::from(1 - n as i64), BigInt::from(2)])
        .mul(&ps_j.sub(&ps_i));
    Ok(lhs == rhs)
}

/// Classification of a tournament by the spectra of its pair-deleted
/// subtournaments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum N2Class {
    Transitive,
    DoublyRegular,
    NotMonomorphic,
}

impl N2Class {
    pub fn as_str(self) -> &'static str {
        match self {
            N2Class::Transitive => "transitive",
            N2Class::DoublyRegular => "doubly_regular",
            N2Class::NotMonomorphic => "not_monomorphic",
        }
    }
}

/// Decides (n-2)-spectral monomorphy structurally: for `n >= 5` it holds
/// exactly for transitive and doubly regular tournaments. Every call
/// cross-validates the structural answer against the spectral decider; a
/// disagreement would falsify the classification theorem and panics.
pub fn classify_n2(t: &Tournament) -> Result<N2Class> {
    let n = t.n();
    if n < 5 {
        return Err(Error::ClassifyOrderTooSmall(n));
    }
    let report = t.structure_report();
    let class = if report.is_transitive {
        N2Class::Transitive
    } else if report.is_doubly_regular {
        N2Class::DoublyRegular
    } else {
        N2Class::NotMonomorphic
    };
    let verdict = spectral_monomorphy(t, n - 2, SpectrumMode::Adjacency)?;
    let expected = !matches!(class, N2Class::NotMonomorphic);
    assert_eq!(
        verdict.is_monomorphic(),
        expected,
        "structural and spectral (n-2)-classifications disagree on a {n}-tournament"
    );
    Ok(class)
}

/// For a doubly regular tournament with parameter t and an arc `x -> y`,
/// deleting both endpoints and sorting the remaining vertices into the four
/// joint-orientation blocks (out/out, in/out, out/in, in/in with respect to
/// `(x, y)`) turns `B B^T - (t+1) I` into a matrix that is constant on each
/// block, with the constants given by a fixed 4x4 pattern. Verifies that
/// entry by entry.
pub fn pair_deletion_gram_blocks(t: &Tournament, x: usize, y: usize) -> Result<bool> {
    let n = t.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::VertexOutOfRange { index: v, n });
        }
    }
    if x == y {
        return Err(Error::SameVertex);
    }
    let param = t
        .doubly_regular_parameter()
        .ok_or(Error::NotDoublyRegular)? as i64;
    if !t.dominates(x, y) {
        return Err(Error::ArcRequired { x, y });
    }

    let strip = |s: VertexSet| s.without(x).without(y);
    let blocks = [
        strip(t.out_set(x).intersection(t.out_set(y))),
        strip(t.in_set(x).intersection(t.out_set(y))),
        strip(t.out_set(x).intersection(t.in_set(y))),
        strip(t.in_set(x).intersection(t.in_set(y))),
    ];
    let sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    let tu = param as usize;
    if sizes != [tu, tu + 1, tu, tu] {
        return Ok(false);
    }

    let order: Vec<usize> = blocks.iter().flat_map(|b| b.iter()).collect();
    let block_of: Vec<usize> = blocks
        .iter()
        .enumerate()
        .flat_map(|(bi, b)| std::iter::repeat(bi).take(b.len()))
        .collect();

    let b = t.adjacency_in_order(&order);
    let gram = b.mul(&b.transpose());
    let lhs = gram.sub(&IntMatrix::identity(order.len()).scale(&BigInt::from(param + 1)));

    let pattern = [
        [param, param, param, param],
        [param, param - 1, param, param - 1],
        [param, param, param - 1, param - 1],
        [param, param - 1, param - 1, param - 2],
    ];
    for u in 0..order.len() {
        for v in 0..order.len() {
            if lhs.get(u, v) != &BigInt::from(pattern[block_of[u]][block_of[v]]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
