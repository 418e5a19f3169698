//! Skew-adjacency matrices, skew-conference detection, and the
//! switching-class searches behind the skew-spectral classification.
//!
//! Two tournaments on the same vertex set are switching equivalent exactly
//! when their skew-adjacency matrices are {±1}-diagonally similar, so
//! switching preserves every skew-spectral property. The searches below are
//! brute force over the 2^(n-1) distinct cuts, which is the point: they
//! certify classifications rather than assume them.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::tournament::{k_subsets, Tournament, VertexSet};

/// Largest order accepted by the brute-force switching searches.
pub const SWITCH_SEARCH_MAX: usize = 24;

/// The skew-adjacency matrix: entry (i,j) is +1 if `i` dominates `j`,
/// -1 if `j` dominates `i`, 0 on the diagonal.
pub fn skew_matrix(t: &Tournament) -> IntMatrix {
    IntMatrix::from_fn(t.n(), |i, j| {
        if i == j {
            BigInt::from(0)
        } else if t.dominates(i, j) {
            BigInt::from(1)
        } else {
            BigInt::from(-1)
        }
    })
}

/// True when the skew-adjacency matrix `S` satisfies `S^T S = (n-1) I`.
pub fn is_skew_conference(t: &Tournament) -> bool {
    let n = t.n();
    let s = skew_matrix(t);
    let gram = s.transpose().mul(&s);
    let target = IntMatrix::identity(n).scale(&BigInt::from(n as i64 - 1));
    gram == target
}

/// Structural property a switching search aims for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SwitchTarget {
    Transitive,
    DoublyRegular,
}

fn target_holds(t: &Tournament, target: SwitchTarget) -> bool {
    match target {
        SwitchTarget::Transitive => t.is_transitive(),
        SwitchTarget::DoublyRegular => t.is_doubly_regular(),
    }
}

/// Enumerates one representative per cut {X, V\X}: the smaller side, and for
/// even splits the side not containing vertex 0. Ordered by size, then by
/// mask value, so the first hit is a canonical certificate.
fn cut_representatives(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..=n / 2).flat_map(move |s| {
        k_subsets(n, s).filter(move |x| 2 * s != n || !x.contains(0))
    })
}

/// Searches all 2^(n-1) cuts for one whose switch satisfies `target`.
/// Returns the first certificate in (size, mask) order, or `None`.
pub fn find_switch(t: &Tournament, target: SwitchTarget) -> Result<Option<VertexSet>> {
    let n = t.n();
    if n > SWITCH_SEARCH_MAX {
        return Err(Error::AboveSwitchBound {
            n,
            bound: SWITCH_SEARCH_MAX,
        });
    }
    for x in cut_representatives(n) {
        let switched = t.switch(x).expect("cut indices are in range");
        if target_holds(&switched, target) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// True when some switch of `t1` equals `t2` as a labeled tournament.
pub fn are_switching_equivalent(t1: &Tournament, t2: &Tournament) -> Result<bool> {
    if t1.n() != t2.n() {
        return Err(Error::SizeMismatch(t1.n(), t2.n()));
    }
    let n = t1.n();
    if n > SWITCH_SEARCH_MAX {
        return Err(Error::AboveSwitchBound {
            n,
            bound: SWITCH_SEARCH_MAX,
        });
    }
    for x in cut_representatives(n) {
        if &t1.switch(x).expect("cut indices are in range") == t2 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Skew-spectral classification tags, in decision order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SkewClassTag {
    SwitchOfTransitive,
    SkewConference,
    SwitchOfDoublyRegular,
    Other,
}

impl SkewClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SkewClassTag::SwitchOfTransitive => "switch_of_transitive",
            SkewClassTag::SkewConference => "skew_conference",
            SkewClassTag::SwitchOfDoublyRegular => "switch_of_doubly_regular",
            SkewClassTag::Other => "other",
        }
    }
}

/// A classification together with the switching set that certifies it, when
/// the class is a switching class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewClass {
    pub tag: SkewClassTag,
    pub certificate: Option<VertexSet>,
}

/// Classifies by the known families of skew-spectrally monomorphic
/// tournaments: switches of transitive tournaments first, then
/// skew-conference matrices, then switches of doubly regular tournaments.
/// The fixed precedence keeps the output deterministic where tiny orders
/// could fall into more than one class.
pub fn classify_skew(t: &Tournament) -> Result<SkewClass> {
    if let Some(x) = find_switch(t, SwitchTarget::Transitive)? {
        return Ok(SkewClass {
            tag: SkewClassTag::SwitchOfTransitive,
            certificate: Some(x),
        });
    }
    if is_skew_conference(t) {
        return Ok(SkewClass {
            tag: SkewClassTag::SkewConference,
            certificate: None,
        });
    }
    if let Some(x) = find_switch(t, SwitchTarget::DoublyRegular)? {
        return Ok(SkewClass {
            tag: SkewClassTag::SwitchOfDoublyRegular,
            certificate: Some(x),
        });
    }
    Ok(SkewClass {
        tag: SkewClassTag::Other,
        certificate: None,
    })
}
