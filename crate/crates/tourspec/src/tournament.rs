//! Tournaments as bit-packed dominance relations, their constructors, and
//! structural predicates.
//!
//! A tournament on `n` vertices stores one `u64` row per vertex; bit `j` of
//! row `i` is set when `i` dominates `j`. Every constructor validates the two
//! defining invariants: zero diagonal, and exactly one arc per vertex pair.

use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::IntMatrix;

/// Largest supported vertex count; dominance rows are single machine words.
pub const MAX_ORDER: usize = 63;

/// A set of vertex indices, stored as a bitmask. Indices are `0..MAX_ORDER`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        VertexSet((1u64 << n) - 1)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(1u64 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u64;
        for &v in indices {
            debug_assert!(v < MAX_ORDER);
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn complement_within(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    pub fn max_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Ascending member indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Parses a comma-separated index list such as `0,2,5`, `{0,2,5}`, or
    /// the empty set written as `` `{}` `` or an empty string.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if inner.is_empty() {
            return Ok(VertexSet::empty());
        }
        let mut out = VertexSet::empty();
        for part in inner.split(',') {
            let v: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::BadVertexList(text.to_string()))?;
            if v >= MAX_ORDER {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    n: MAX_ORDER,
                });
            }
            out = out.with(v);
        }
        Ok(out)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut out = VertexSet::empty();
        for v in iter {
            out = out.with(v);
        }
        out
    }
}

/// Joint neighborhood sizes of an ordered vertex pair `(x, y)`.
///
/// The four counts partition the remaining `n - 2` vertices by their
/// orientation towards `x` and `y`. When `x` dominates `y`, `in_out` is the
/// number of 3-cycles through the pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairProfile {
    /// `|N+(x) ∩ N+(y)|`: jointly dominated.
    pub out_out: usize,
    /// `|N-(x) ∩ N-(y)|`: joint dominators.
    pub in_in: usize,
    /// `|N+(x) ∩ N-(y)|`.
    pub out_in: usize,
    /// `|N-(x) ∩ N+(y)|`.
    pub in_out: usize,
}

impl PairProfile {
    pub fn as_tuple(self) -> (usize, usize, usize, usize) {
        (self.out_out, self.in_in, self.out_in, self.in_out)
    }
}

/// Structural summary of a tournament: degrees, regularity ladder, 3-cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub out_degrees: Vec<usize>,
    pub is_transitive: bool,
    pub is_regular: bool,
    pub is_near_regular: bool,
    pub is_doubly_regular: bool,
    pub is_homogeneous: bool,
    /// Joint domination constant, present exactly when doubly regular.
    pub t: Option<usize>,
    pub three_cycle_count: u64,
}

/// A labeled tournament on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament(n={}, rows=[", self.n)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r:b}")?;
        }
        write!(f, "])")
    }
}

impl Tournament {
    /// Builds a tournament from dominance bit-rows, validating both
    /// invariants: zero diagonal and exactly one arc per pair.
    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n < 1 {
            return Err(Error::OrderTooSmall { n, min: 1 });
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        if rows.len() != n {
            return Err(Error::RowCount {
                expected: n,
                found: rows.len(),
            });
        }
        let mask = VertexSet::full(n).bits();
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    index: (63 - (row & !mask).leading_zeros()) as usize,
                    n,
                });
            }
            if (row >> i) & 1 == 1 {
                return Err(Error::NonzeroDiagonal { i });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let ij = (rows[i] >> j) & 1;
                let ji = (rows[j] >> i) & 1;
                if ij + ji != 1 {
                    return Err(Error::BrokenPair { i, j });
                }
            }
        }
        Ok(Tournament { n, rows })
    }

    /// Builds from an arc predicate: `dom(i, j)` must hold for exactly one
    /// orientation of every pair.
    pub fn from_dominance(n: usize, dom: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let rows = (0..n)
            .map(|i| {
                let mut row = 0u64;
                for j in 0..n {
                    if i != j && dom(i, j) {
                        row |= 1 << j;
                    }
                }
                row
            })
            .collect();
        Self::from_rows(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn dominates(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    /// Out-neighborhood of `v` as a bitmask.
    pub fn out_set(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v])
    }

    /// In-neighborhood of `v` as a bitmask.
    pub fn in_set(&self, v: usize) -> VertexSet {
        let mask = VertexSet::full(self.n).bits();
        VertexSet::from_bits(mask & !self.rows[v] & !(1u64 << v))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.n - 1 - self.out_degree(v)
    }

    // ---- constructors ----------------------------------------------------

    /// Parses the line-oriented text format: a header line with the vertex
    /// count, then `n` rows of `n` characters over `{0,1}`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or("").trim_end();
        let n: usize = header
            .parse()
            .map_err(|_| Error::MalformedHeader(header.to_string()))?;
        if n < 1 {
            return Err(Error::OrderTooSmall { n, min: 1 });
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        let mut rows = Vec::with_capacity(n);
        for (i, line) in lines.by_ref().take(n).enumerate() {
            let line = line.trim_end_matches('\r');
            if line.chars().count() != n {
                return Err(Error::RowLength {
                    row: i,
                    expected: n,
                    found: line.chars().count(),
                });
            }
            let mut row = 0u64;
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => row |= 1 << j,
                    _ => return Err(Error::BadCharacter { row: i, col: j, ch }),
                }
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::RowCount {
                expected: n,
                found: rows.len(),
            });
        }
        Self::from_rows(n, rows)
    }

    /// Canonical text form: header line, then one `{0,1}` row per vertex,
    /// LF line endings, no trailing whitespace.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.n + 1) * (self.n + 1));
        out.push_str(&self.n.to_string());
        out.push('\n');
        for i in 0..self.n {
            for j in 0..self.n {
                out.push(if self.dominates(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// The transitive tournament: `i` dominates `j` exactly when `i < j`.
    pub fn transitive(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::OrderTooSmall { n, min: 1 });
        }
        Self::from_dominance(n, |i, j| i < j)
    }

    /// The quadratic-residue tournament on an odd prime `p ≡ 3 (mod 4)`:
    /// `x` dominates `y` exactly when `x - y` is a nonzero square mod `p`.
    pub fn paley(p: u64) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p % 4 != 3 {
            // -1 would be a square, so the residue rule would orient no pair.
            return Err(Error::NotThreeModFour(p));
        }
        let mut is_residue = vec![false; p as usize];
        for x in 1..p {
            is_residue[((x * x) % p) as usize] = true;
        }
        Self::from_dominance(p as usize, |x, y| {
            let diff = ((x as u64 + p) - y as u64) % p;
            is_residue[diff as usize]
        })
    }

    /// The rotational tournament on odd `n` with the given connection
    /// symbols: `x` dominates `y` exactly when `(y - x) mod n` is a symbol.
    /// The symbols must contain exactly one of `s` and `n - s` for every
    /// `s` in `1..n`, which forces regularity with out-degree `(n-1)/2`.
    pub fn circulant(n: usize, symbols: VertexSet) -> Result<Self> {
        if n < 1 {
            return Err(Error::OrderTooSmall { n, min: 1 });
        }
        if n % 2 == 0 {
            return Err(Error::EvenOrder(n));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        for s in 1..n {
            if symbols.contains(s) == symbols.contains(n - s) {
                return Err(Error::BadSymbols { s });
            }
        }
        if let Some(max) = symbols.max_element() {
            if max >= n {
                return Err(Error::VertexOutOfRange { index: max, n });
            }
        }
        if symbols.contains(0) {
            return Err(Error::BadSymbols { s: 0 });
        }
        Self::from_dominance(n, |x, y| symbols.contains((y + n - x) % n))
    }

    /// The smallest regular tournament whose one-vertex-deleted spectra are
    /// not all equal: 7 vertices, written out explicitly.
    pub fn counterexample7() -> Self {
        let rows: [[u64; 7]; 7] = [
            [0, 0, 0, 0, 1, 1, 1],
            [1, 0, 0, 1, 0, 0, 1],
            [1, 1, 0, 0, 1, 0, 0],
            [1, 0, 1, 0, 0, 1, 0],
            [0, 1, 0, 1, 0, 0, 1],
            [0, 1, 1, 0, 1, 0, 0],
            [0, 0, 1, 1, 0, 1, 0],
        ];
        Self::from_dominance(7, |i, j| rows[i][j] == 1).expect("fixed matrix is a tournament")
    }

    /// The transitive tournament with its extremal arc reversed: equal to
    /// `transitive(n)` except that `n-1` dominates `0`.
    pub fn reversed_transitive(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OrderTooSmall { n, min: 2 });
        }
        Self::from_dominance(n, |i, j| {
            if (i, j) == (0, n - 1) {
                false
            } else if (i, j) == (n - 1, 0) {
                true
            } else {
                i < j
            }
        })
    }

    /// Reverses every arc between `x` and its complement; arcs inside either
    /// side are unchanged. Switching by `x` and by its complement coincide.
    pub fn switch(&self, x: VertexSet) -> Result<Self> {
        if let Some(max) = x.max_element() {
            if max >= self.n {
                return Err(Error::VertexOutOfRange { index: max, n: self.n });
            }
        }
        let full = VertexSet::full(self.n).bits();
        let xbits = x.bits();
        let rows = (0..self.n)
            .map(|i| {
                let flip = if x.contains(i) { full & !xbits } else { xbits };
                self.rows[i] ^ (flip & !(1u64 << i))
            })
            .collect();
        Self::from_rows(self.n, rows)
    }

    /// Combines three regular tournaments of equal order `n` into a regular
    /// tournament on `3n` vertices: each part keeps its internal arcs, and
    /// the parts dominate each other cyclically (first over second, second
    /// over third, third over first).
    pub fn triple(t1: &Tournament, t2: &Tournament, t3: &Tournament) -> Result<Self> {
        let n = t1.n;
        if t2.n != n {
            return Err(Error::SizeMismatch(n, t2.n));
        }
        if t3.n != n {
            return Err(Error::SizeMismatch(n, t3.n));
        }
        for t in [t1, t2, t3] {
            if !t.is_regular() {
                return Err(Error::NotRegular);
            }
        }
        if 3 * n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n: 3 * n, max: MAX_ORDER });
        }
        let parts = [t1, t2, t3];
        Self::from_dominance(3 * n, |i, j| {
            let (bi, bj) = (i / n, j / n);
            if bi == bj {
                parts[bi].dominates(i % n, j % n)
            } else {
                // block b dominates block (b + 1) mod 3
                (bi + 1) % 3 == bj
            }
        })
    }

    /// The subtournament induced on `alpha`, with vertex order preserved.
    pub fn subtournament(&self, alpha: VertexSet) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(max) = alpha.max_element() {
            if max >= self.n {
                return Err(Error::VertexOutOfRange { index: max, n: self.n });
            }
        }
        let idx = alpha.to_indices();
        Self::from_dominance(idx.len(), |i, j| self.dominates(idx[i], idx[j]))
    }

    /// Deletes a single vertex.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { index: v, n: self.n });
        }
        self.subtournament(VertexSet::full(self.n).without(v))
    }

    // ---- queries ----------------------------------------------------------

    /// Joint neighborhood sizes of the ordered pair `(x, y)`; the four
    /// counts always sum to `n - 2`.
    pub fn pair_profile(&self, x: usize, y: usize) -> Result<PairProfile> {
        if x >= self.n {
            return Err(Error::VertexOutOfRange { index: x, n: self.n });
        }
        if y >= self.n {
            return Err(Error::VertexOutOfRange { index: y, n: self.n });
        }
        if x == y {
            return Err(Error::SameVertex);
        }
        let out_x = self.out_set(x).bits();
        let out_y = self.out_set(y).bits();
        let in_x = self.in_set(x).bits() & !(1u64 << y);
        let in_y = self.in_set(y).bits() & !(1u64 << x);
        let out_x = out_x & !(1u64 << y);
        let out_y = out_y & !(1u64 << x);
        Ok(PairProfile {
            out_out: (out_x & out_y).count_ones() as usize,
            in_in: (in_x & in_y).count_ones() as usize,
            out_in: (out_x & in_y).count_ones() as usize,
            in_out: (in_x & out_y).count_ones() as usize,
        })
    }

    /// Number of 3-cycles through the unordered pair `{x, y}`.
    pub fn three_cycles_through(&self, x: usize, y: usize) -> Result<usize> {
        let p = self.pair_profile(x, y)?;
        Ok(if self.dominates(x, y) { p.in_out } else { p.out_in })
    }

    /// Total number of 3-cycles, by the degree identity
    /// `C(n,3) - sum_v C(outdeg(v), 2)`.
    pub fn three_cycle_count(&self) -> u64 {
        let n = self.n as u64;
        let total = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
        let transitive_triples: u64 = (0..self.n)
            .map(|v| {
                let d = self.out_degree(v) as u64;
                d * d.saturating_sub(1) / 2
            })
            .sum();
        total - transitive_triples
    }

    /// Zero 3-cycles characterizes transitivity for tournaments.
    pub fn is_transitive(&self) -> bool {
        self.three_cycle_count() == 0
    }

    /// All out-degrees equal `(n-1)/2` (forces odd order for `n > 1`).
    pub fn is_regular(&self) -> bool {
        let k = (self.n - 1) / 2;
        self.n % 2 == 1 && (0..self.n).all(|v| self.out_degree(v) == k)
    }

    /// Even order with every out-degree in `{(n-2)/2, n/2}`.
    pub fn is_near_regular(&self) -> bool {
        if self.n % 2 != 0 {
            return false;
        }
        (0..self.n).all(|v| {
            let d = self.out_degree(v);
            d == (self.n - 2) / 2 || d == self.n / 2
        })
    }

    /// Joint out-degree of every unordered pair is the same constant `t`;
    /// returns that constant. Only meaningful for `n >= 3`.
    pub fn doubly_regular_parameter(&self) -> Option<usize> {
        if self.n < 3 {
            return None;
        }
        let mut t = None;
        for x in 0..self.n {
            for y in x + 1..self.n {
                let joint = (self.out_set(x).bits() & self.out_set(y).bits()).count_ones() as usize;
                match t {
                    None => t = Some(joint),
                    Some(v) if v != joint => return None,
                    _ => {}
                }
            }
        }
        t
    }

    pub fn is_doubly_regular(&self) -> bool {
        self.doubly_regular_parameter().is_some()
    }

    /// Every pair lies on the same positive number of 3-cycles.
    pub fn is_homogeneous(&self) -> bool {
        if self.n < 3 {
            return false;
        }
        let mut k = None;
        for x in 0..self.n {
            for y in x + 1..self.n {
                let c = self
                    .three_cycles_through(x, y)
                    .expect("indices in range and distinct");
                match k {
                    None => k = Some(c),
                    Some(v) if v != c => return false,
                    _ => {}
                }
            }
        }
        k.is_some_and(|v| v > 0)
    }

    /// Full structural summary; every flag is computed by its definition.
    pub fn structure_report(&self) -> StructureReport {
        let t = self.doubly_regular_parameter();
        StructureReport {
            out_degrees: (0..self.n).map(|v| self.out_degree(v)).collect(),
            is_transitive: self.is_transitive(),
            is_regular: self.is_regular(),
            is_near_regular: self.is_near_regular(),
            is_doubly_regular: t.is_some(),
            is_homogeneous: self.is_homogeneous(),
            t,
            three_cycle_count: self.three_cycle_count(),
        }
    }

    // ---- matrices ----------------------------------------------------------

    /// Adjacency matrix in vertex order.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| BigInt::from(u8::from(self.dominates(i, j))))
    }

    /// Adjacency matrix with rows and columns arranged by `order`, which
    /// must list distinct vertices.
    pub fn adjacency_in_order(&self, order: &[usize]) -> IntMatrix {
        IntMatrix::from_fn(order.len(), |i, j| {
            BigInt::from(u8::from(self.dominates(order[i], order[j])))
        })
    }
}

/// All k-element subsets of `0..n` in colexicographic order, which for
/// bitmask representatives is simply increasing numeric order (Gosper's
/// hack produces the next mask with the same popcount).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    debug_assert!(n <= MAX_ORDER);
    debug_assert!(k <= n);
    let limit = 1u64 << n;
    let mut cur = if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let v = cur?;
        cur = if v == 0 {
            None
        } else {
            let low = v & v.wrapping_neg();
            let carry = v + low;
            if carry >= limit {
                None
            } else {
                Some(carry | (((v ^ carry) / low) >> 2))
            }
        };
        Some(VertexSet::from_bits(v))
    })
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_three_cycle() {
        let t = Tournament::parse("3\n010\n001\n100").unwrap();
        assert!(t.dominates(0, 1));
        assert!(t.dominates(1, 2));
        assert!(t.dominates(2, 0));
        assert_eq!(t.n(), 3);
    }

    #[test]
    fn parse_single_vertex() {
        let t = Tournament::parse("1\n0").unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.out_degree(0), 0);
    }

    #[test]
    fn parse_reports_missing_arc_with_coordinates() {
        let err = Tournament::parse("3\n010\n001\n000").unwrap_err();
        assert_eq!(err, Error::BrokenPair { i: 0, j: 2 });
    }

    #[test]
    fn parse_error_coordinates() {
        assert_eq!(
            Tournament::parse("x\n0").unwrap_err(),
            Error::MalformedHeader("x".into())
        );
        assert_eq!(
            Tournament::parse("2\n011\n00").unwrap_err(),
            Error::RowLength { row: 0, expected: 2, found: 3 }
        );
        assert_eq!(
            Tournament::parse("2\n01\n0x").unwrap_err(),
            Error::BadCharacter { row: 1, col: 1, ch: 'x' }
        );
        assert_eq!(
            Tournament::parse("2\n11\n00").unwrap_err(),
            Error::NonzeroDiagonal { i: 0 }
        );
        assert_eq!(
            Tournament::parse("2\n01\n10").unwrap_err(),
            Error::BrokenPair { i: 0, j: 1 }
        );
        assert_eq!(
            Tournament::parse("2\n01").unwrap_err(),
            Error::RowCount { expected: 2, found: 1 }
        );
    }

    #[test]
    fn parse_then_serialize_is_identity_on_canonical_text() {
        let text = "3\n010\n001\n100\n";
        let t = Tournament::parse(text).unwrap();
        assert_eq!(t.to_text(), text);
    }

    #[test]
    fn transitive_is_strictly_upper_triangular() {
        let t = Tournament::transitive(3).unwrap();
        assert!(t.dominates(0, 1) && t.dominates(0, 2) && t.dominates(1, 2));
        assert_eq!(Tournament::transitive(0).unwrap_err(), Error::OrderTooSmall { n: 0, min: 1 });
        assert_eq!(Tournament::transitive(4).unwrap().three_cycle_count(), 0);
    }

    #[test]
    fn paley_three_is_the_backward_cycle() {
        // Squares mod 3 are {1}, so x dominates y exactly when x - y = 1.
        let t = Tournament::paley(3).unwrap();
        assert!(t.dominates(1, 0));
        assert!(t.dominates(2, 1));
        assert!(t.dominates(0, 2));
    }

    #[test]
    fn paley_seven_out_neighborhood_of_zero() {
        // Squares mod 7 are {1,2,4}; 0 dominates y when -y is one of them.
        let t = Tournament::paley(7).unwrap();
        assert_eq!(t.out_set(0).to_indices(), vec![3, 5, 6]);
    }

    #[test]
    fn paley_seven_is_doubly_regular_with_t_one() {
        let r = Tournament::paley(7).unwrap().structure_report();
        assert!(r.is_doubly_regular);
        assert_eq!(r.t, Some(1));
        assert!(r.is_regular);
        assert!(r.is_homogeneous);
        assert_eq!(r.three_cycle_count, 14);
    }

    #[test]
    fn paley_rejects_bad_moduli() {
        assert_eq!(Tournament::paley(9).unwrap_err(), Error::NotPrime(9));
        assert_eq!(Tournament::paley(13).unwrap_err(), Error::NotThreeModFour(13));
        assert_eq!(Tournament::paley(2).unwrap_err(), Error::NotPrime(2));
    }

    #[test]
    fn circulant_examples() {
        let c3 = Tournament::circulant(3, VertexSet::from_indices(&[1])).unwrap();
        assert!(c3.dominates(0, 1) && c3.dominates(1, 2) && c3.dominates(2, 0));

        let c5 = Tournament::circulant(5, VertexSet::from_indices(&[1, 2])).unwrap();
        assert!((0..5).all(|v| c5.out_degree(v) == 2));

        // Symbols {3,5,6} are exactly the negated squares mod 7.
        let c7 = Tournament::circulant(7, VertexSet::from_indices(&[3, 5, 6])).unwrap();
        assert_eq!(c7, Tournament::paley(7).unwrap());
    }

    #[test]
    fn circulant_rejects_non_partitioning_symbols() {
        let err = Tournament::circulant(5, VertexSet::from_indices(&[1, 4])).unwrap_err();
        assert!(matches!(err, Error::BadSymbols { .. }));
        assert!(Tournament::circulant(4, VertexSet::from_indices(&[1])).is_err());
    }

    #[test]
    fn counterexample7_is_regular_not_doubly_regular() {
        let t = Tournament::counterexample7();
        assert!((0..7).all(|v| t.out_degree(v) == 3));
        let r = t.structure_report();
        assert!(r.is_regular);
        assert!(!r.is_doubly_regular);
        assert_eq!(r.t, None);
        // Every regular 7-tournament has C(7,3) - 7*C(3,2) = 14 three-cycles.
        assert_eq!(r.three_cycle_count, 14);
    }

    #[test]
    fn reversed_transitive_examples() {
        let r4 = Tournament::reversed_transitive(4).unwrap();
        // Independent oracle: enumerate all triples and test cyclicity.
        let mut cyclic = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                for c in b + 1..4 {
                    let fwd = r4.dominates(a, b) && r4.dominates(b, c) && r4.dominates(c, a);
                    let bwd = r4.dominates(b, a) && r4.dominates(c, b) && r4.dominates(a, c);
                    if fwd || bwd {
                        cyclic.push([a, b, c]);
                    }
                }
            }
        }
        assert_eq!(cyclic, vec![[0, 1, 3], [0, 2, 3]]);

        let r2 = Tournament::reversed_transitive(2).unwrap();
        assert!(r2.dominates(1, 0));
        assert!(Tournament::reversed_transitive(1).is_err());
    }

    #[test]
    fn switch_identities() {
        let t = Tournament::paley(7).unwrap();
        assert_eq!(t.switch(VertexSet::empty()).unwrap(), t);
        assert_eq!(t.switch(VertexSet::full(7)).unwrap(), t);
        let x = VertexSet::from_indices(&[1, 3, 4]);
        assert_eq!(t.switch(x).unwrap().switch(x).unwrap(), t);
        assert_eq!(
            t.switch(x).unwrap(),
            t.switch(x.complement_within(7)).unwrap()
        );
        assert!(t.switch(VertexSet::from_indices(&[9])).is_err());
    }

    #[test]
    fn switching_reversed_transitive_at_zero_kills_all_three_cycles() {
        for n in [4, 6, 9] {
            let rn = Tournament::reversed_transitive(n).unwrap();
            let switched = rn.switch(VertexSet::singleton(0)).unwrap();
            assert_eq!(switched.three_cycle_count(), 0);
        }
    }

    #[test]
    fn triple_of_three_cycles() {
        let c3 = Tournament::circulant(3, VertexSet::singleton(1)).unwrap();
        let t = Tournament::triple(&c3, &c3, &c3).unwrap();
        assert_eq!(t.n(), 9);
        assert!((0..9).all(|v| t.out_degree(v) == 4));
        // Cross arcs: first block over second, second over third, third over first.
        assert!(t.dominates(0, 3) && t.dominates(3, 6) && t.dominates(6, 0));
    }

    #[test]
    fn triple_rejects_unequal_or_irregular_parts() {
        let c3 = Tournament::circulant(3, VertexSet::singleton(1)).unwrap();
        let c5 = Tournament::circulant(5, VertexSet::from_indices(&[1, 2])).unwrap();
        assert!(matches!(
            Tournament::triple(&c3, &c5, &c3),
            Err(Error::SizeMismatch(3, 5))
        ));
        let t3 = Tournament::transitive(3).unwrap();
        assert_eq!(Tournament::triple(&c3, &t3, &c3).unwrap_err(), Error::NotRegular);
    }

    #[test]
    fn triple_of_regular_sevens_is_regular_21() {
        let p7 = Tournament::paley(7).unwrap();
        let w7 = Tournament::counterexample7();
        let t = Tournament::triple(&p7, &p7, &w7).unwrap();
        assert_eq!(t.n(), 21);
        assert!((0..21).all(|v| t.out_degree(v) == 10));
        assert!(t.is_regular());
    }

    #[test]
    fn subtournament_preserves_index_order() {
        let t = Tournament::paley(7).unwrap();
        assert_eq!(t.subtournament(VertexSet::full(7)).unwrap(), t);
        let s = t.subtournament(VertexSet::from_indices(&[0, 3, 5])).unwrap();
        assert_eq!(s.n(), 3);
        assert_eq!(s.dominates(0, 1), t.dominates(0, 3));
        assert_eq!(s.dominates(1, 2), t.dominates(3, 5));
        assert!(t.subtournament(VertexSet::empty()).is_err());
        assert!(t.subtournament(VertexSet::from_indices(&[7])).is_err());
    }

    #[test]
    fn subtournaments_of_transitive_are_transitive() {
        let t = Tournament::transitive(5).unwrap();
        for bits in 1u64..32 {
            let s = t.subtournament(VertexSet::from_bits(bits)).unwrap();
            assert!(s.is_transitive());
        }
    }

    #[test]
    fn pair_profile_examples() {
        // Any arc of the order-7 quadratic-residue tournament sees (1,1,1,2).
        let p7 = Tournament::paley(7).unwrap();
        for x in 0..7 {
            for y in 0..7 {
                if x != y && p7.dominates(x, y) {
                    assert_eq!(p7.pair_profile(x, y).unwrap().as_tuple(), (1, 1, 1, 2));
                }
            }
        }
        let t4 = Tournament::transitive(4).unwrap();
        assert_eq!(t4.pair_profile(0, 1).unwrap().as_tuple(), (2, 0, 0, 0));
        assert_eq!(t4.pair_profile(0, 0).unwrap_err(), Error::SameVertex);
    }

    #[test]
    fn pair_profile_sums_to_n_minus_2() {
        let t = Tournament::counterexample7();
        for x in 0..7 {
            for y in 0..7 {
                if x != y {
                    let p = t.pair_profile(x, y).unwrap();
                    assert_eq!(p.out_out + p.in_in + p.out_in + p.in_out, 5);
                }
            }
        }
    }

    #[test]
    fn three_cycles_through_pair_counts_in_out() {
        let p7 = Tournament::paley(7).unwrap();
        for x in 0..7 {
            for y in x + 1..7 {
                // Independent count: enumerate the third vertex directly.
                let direct = (0..7)
                    .filter(|&z| z != x && z != y)
                    .filter(|&z| {
                        let tri = [(x, y), (y, z), (z, x)];
                        let fwd = tri.iter().all(|&(a, b)| p7.dominates(a, b));
                        let bwd = tri.iter().all(|&(a, b)| p7.dominates(b, a));
                        fwd || bwd
                    })
                    .count();
                assert_eq!(p7.three_cycles_through(x, y).unwrap(), direct);
            }
        }
    }

    #[test]
    fn structure_report_on_transitive_six() {
        let r = Tournament::transitive(6).unwrap().structure_report();
        assert!(r.is_transitive);
        assert!(!r.is_regular);
        assert!(!r.is_doubly_regular);
        assert!(!r.is_homogeneous);
        assert_eq!(r.three_cycle_count, 0);
        assert_eq!(r.out_degrees, vec![5, 4, 3, 2, 1, 0]);
    }

    #[test]
    fn near_regularity() {
        // Rotational-like 4-tournament: out-degrees {1,2,2,1}.
        let t = Tournament::from_dominance(4, |i, j| (j + 4 - i) % 4 == 1 || (i, j) == (0, 2) || (i, j) == (1, 3))
            .unwrap();
        assert!(t.is_near_regular());
        assert!(!Tournament::transitive(4).unwrap().is_near_regular());
        assert!(!Tournament::paley(7).unwrap().is_near_regular());
    }

    #[test]
    fn single_vertex_structure() {
        let r = Tournament::transitive(1).unwrap().structure_report();
        assert!(r.is_transitive);
        assert!(r.is_regular);
        assert!(!r.is_doubly_regular);
        assert!(!r.is_homogeneous);
        assert_eq!(r.t, None);
    }

    #[test]
    fn three_cycle_of_order_three_is_doubly_regular_with_t_zero() {
        let c3 = Tournament::circulant(3, VertexSet::singleton(1)).unwrap();
        let r = c3.structure_report();
        assert!(r.is_doubly_regular);
        assert_eq!(r.t, Some(0));
        assert!(r.is_homogeneous);
    }

    #[test]
    fn k_subsets_colex_order() {
        let subsets: Vec<Vec<usize>> = k_subsets(4, 2).map(|s| s.to_indices()).collect();
        assert_eq!(
            subsets,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3],
            ]
        );
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(5, 5).count(), 1);
        assert_eq!(k_subsets(7, 3).count(), 35);
        // Masks strictly increase, which is exactly colex order.
        let masks: Vec<u64> = k_subsets(9, 4).map(|s| s.bits()).collect();
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(masks.len(), 126);
    }

    #[test]
    fn vertex_set_display_and_parse() {
        let s = VertexSet::from_indices(&[5, 0, 2]);
        assert_eq!(s.to_string(), "{0,2,5}");
        assert_eq!(VertexSet::parse("{0,2,5}").unwrap(), s);
        assert_eq!(VertexSet::parse("0, 2, 5").unwrap(), s);
        assert_eq!(VertexSet::parse("{}").unwrap(), VertexSet::empty());
        assert_eq!(VertexSet::empty().to_string(), "{}");
    }

    #[test]
    fn adjacency_matrix_row_sums_are_out_degrees() {
        let t = Tournament::counterexample7();
        let a = t.adjacency_matrix();
        for i in 0..7 {
            let sum: BigInt = (0..7).map(|j| a.get(i, j).clone()).sum();
            assert_eq!(sum, BigInt::from(t.out_degree(i)));
        }
    }
}
