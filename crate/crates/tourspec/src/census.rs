//! Exhaustive labeled enumeration of small tournaments, with per-instance
//! monomorphy decisions aggregated into classification counts.
//!
//! Enumeration is over labeled tournaments: the classification statements
//! quantify over all tournaments, so labeled verification is logically
//! sufficient and needs no canonical-form machinery. All counts reported
//! here are labeled counts.
//!
//! Runs are deterministic for any worker count: the mask space is processed
//! in fixed-size chunks, each chunk is evaluated in parallel, and results
//! are merged back in mask order. A checkpoint records the next unprocessed
//! index plus the partial tallies, so an interrupted run resumes to a
//! byte-identical report.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::char_poly;
use crate::skew::{classify_skew, SkewClassTag};
use crate::spectra::{doubly_regular_polys, spectral_monomorphy, SpectrumMode};
use crate::tournament::Tournament;

/// Orders the census can enumerate exhaustively.
pub const EXHAUSTIVE_MIN: usize = 3;
pub const EXHAUSTIVE_MAX: usize = 7;
/// Order that is only reachable in seeded sampling mode.
pub const SAMPLED_ORDER: usize = 8;

/// Which classification statement the census is probing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusQuestion {
    /// Pair-deleted spectra (k = n-2, adjacency): monomorphic instances must
    /// be transitive or doubly regular.
    Theorem1,
    /// Middle range (3 <= k <= n-3, adjacency): monomorphic instances must
    /// be transitive.
    Prop3,
    /// k = n-3, skew: monomorphic instances must be switches of transitive
    /// tournaments or have skew-conference matrices.
    Prop8,
    /// k = n-2, skew: monomorphic instances must fall into the three known
    /// classes; anything else is an empirical exception worth reporting.
    Problem1,
}

impl CensusQuestion {
    pub fn as_str(self) -> &'static str {
        match self {
            CensusQuestion::Theorem1 => "theorem1",
            CensusQuestion::Prop3 => "prop3",
            CensusQuestion::Prop8 => "prop8",
            CensusQuestion::Problem1 => "problem1",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "theorem1" => Ok(CensusQuestion::Theorem1),
            "prop3" => Ok(CensusQuestion::Prop3),
            "prop8" => Ok(CensusQuestion::Prop8),
            "problem1" => Ok(CensusQuestion::Problem1),
            other => Err(Error::CensusParams(format!("unknown question {other:?}"))),
        }
    }

    fn required_mode(self) -> SpectrumMode {
        match self {
            CensusQuestion::Theorem1 | CensusQuestion::Prop3 => SpectrumMode::Adjacency,
            CensusQuestion::Prop8 | CensusQuestion::Problem1 => SpectrumMode::Skew,
        }
    }
}

/// Parameters of a census run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusParams {
    pub n: usize,
    pub k: usize,
    pub mode: SpectrumMode,
    pub question: CensusQuestion,
    /// Worker threads; 0 means the default parallelism, 1 means sequential.
    #[serde(default)]
    pub jobs: usize,
    /// Number of seeded samples; `None` requests exhaustive enumeration.
    pub samples: Option<u64>,
    /// Seed for sampling mode, recorded in the report.
    #[serde(default)]
    pub seed: u64,
}

impl CensusParams {
    pub fn exhaustive(n: usize, k: usize, mode: SpectrumMode, question: CensusQuestion) -> Self {
        CensusParams {
            n,
            k,
            mode,
            question,
            jobs: 0,
            samples: None,
            seed: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        let CensusParams { n, k, mode, question, .. } = *self;
        match self.samples {
            None => {
                if !(EXHAUSTIVE_MIN..=EXHAUSTIVE_MAX).contains(&n) {
                    return Err(Error::CensusOrder {
                        n,
                        lo: EXHAUSTIVE_MIN,
                        hi: EXHAUSTIVE_MAX,
                    });
                }
            }
            Some(count) => {
                if n != SAMPLED_ORDER {
                    return Err(Error::CensusParams(format!(
                        "sampling is only supported at n = {SAMPLED_ORDER}, got n = {n}"
                    )));
                }
                if count == 0 {
                    return Err(Error::CensusParams("samples must be positive".into()));
                }
            }
        }
        if mode != question.required_mode() {
            return Err(Error::CensusParams(format!(
                "question {} requires {} mode",
                question.as_str(),
                question.required_mode().as_str()
            )));
        }
        let k_ok = match question {
            // The pair-deletion classification assumes n >= 5.
            CensusQuestion::Theorem1 => n >= 5 && k + 2 == n,
            CensusQuestion::Problem1 => k + 2 == n,
            // The (n-3)-skew classification assumes n >= 7.
            CensusQuestion::Prop8 => n >= 7 && k + 3 == n,
            CensusQuestion::Prop3 => (3..=n.saturating_sub(3)).contains(&k),
        };
        if !k_ok {
            return Err(Error::CensusParams(format!(
                "k = {k} inconsistent with question {} at n = {n}",
                question.as_str()
            )));
        }
        Ok(())
    }
}

/// Aggregated result of a census run. The serialized form deliberately
/// excludes the wall time so that reports are byte-for-byte reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub k: usize,
    pub mode: SpectrumMode,
    pub question: CensusQuestion,
    pub sampled: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    /// Number of tournaments examined.
    pub total: u64,
    /// Classification tallies; the values sum to `total`.
    pub class_counts: BTreeMap<String, u64>,
    /// Monomorphic tournaments not explained by the question's classes,
    /// in enumeration order, serialized in the text format.
    pub exceptions: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CensusReport {
    /// Machine-readable document (deterministic; excludes wall time).
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary table.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "census question={} mode={} n={} k={}{}\n",
            self.question.as_str(),
            self.mode.as_str(),
            self.n,
            self.k,
            if self.sampled {
                format!(
                    " sampled={} seed={}",
                    self.samples.unwrap_or(0),
                    self.seed.unwrap_or(0)
                )
            } else {
                String::new()
            }
        ));
        out.push_str(&format!("total examined: {}\n", self.total));
        for (class, count) in &self.class_counts {
            out.push_str(&format!("  {class:<28} {count}\n"));
        }
        if self.exceptions.is_empty() {
            out.push_str("exceptions: none\n");
        } else {
            out.push_str(&format!("exceptions: {}\n", self.exceptions.len()));
            for e in &self.exceptions {
                out.push_str(&format!("---\n{e}"));
            }
        }
        out.push_str(&format!("elapsed: {:.3}s\n", self.elapsed.as_secs_f64()));
        out
    }
}

/// Resumable state: everything processed before `next_index`, tallied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCheckpoint {
    pub params: CensusParams,
    pub next_index: u64,
    pub class_counts: BTreeMap<String, u64>,
    pub exceptions: Vec<String>,
}

/// Maps a pair-bitmask to a tournament: bit `j(j-1)/2 + i` (for `i < j`)
/// set means `i` dominates `j`. The all-ones mask is the transitive order.
pub fn tournament_from_pair_mask(n: usize, mask: u64) -> Tournament {
    Tournament::from_dominance(n, |i, j| {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let bit = (mask >> (hi * (hi - 1) / 2 + lo)) & 1;
        (bit == 1) == (i < j)
    })
    .expect("pair mask orients every pair exactly once")
}

/// All `2^C(n,2)` labeled tournaments on `n` vertices, by increasing
/// pair-bitmask. Exhaustive orders only.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Tournament>> {
    if !(EXHAUSTIVE_MIN..=EXHAUSTIVE_MAX).contains(&n) {
        return Err(Error::CensusOrder {
            n,
            lo: EXHAUSTIVE_MIN,
            hi: EXHAUSTIVE_MAX,
        });
    }
    let pairs = n * (n - 1) / 2;
    Ok((0..1u64 << pairs).map(move |m| tournament_from_pair_mask(n, m)))
}

/// Per-instance outcome: a class key, plus the serialized tournament when
/// it is an unexplained exception.
fn classify_instance(t: &Tournament, params: &CensusParams) -> (&'static str, Option<String>) {
    let verdict = spectral_monomorphy(t, params.k, params.mode)
        .expect("validated k is in range");
    if !verdict.is_monomorphic() {
        return ("not_monomorphic", None);
    }
    match params.question {
        CensusQuestion::Theorem1 => {
            let report = t.structure_report();
            if report.is_transitive {
                ("transitive", None)
            } else if report.is_doubly_regular {
                // Every doubly regular instance must realize the closed-form
                // spectrum; a mismatch would falsify the formula.
                if let Ok(forms) = doubly_regular_polys(t.n()) {
                    assert_eq!(
                        char_poly(&t.adjacency_matrix()),
                        forms.full,
                        "doubly regular tournament with unexpected spectrum"
                    );
                }
                ("doubly_regular", None)
            } else {
                ("exception", Some(t.to_text()))
            }
        }
        CensusQuestion::Prop3 => {
            if t.is_transitive() {
                ("transitive", None)
            } else {
                ("exception", Some(t.to_text()))
            }
        }
        CensusQuestion::Prop8 => {
            let class = classify_skew(t).expect("order within switching bound");
            match class.tag {
                SkewClassTag::SwitchOfTransitive => ("switch_of_transitive", None),
                SkewClassTag::SkewConference => ("skew_conference", None),
                _ => ("exception", Some(t.to_text())),
            }
        }
        CensusQuestion::Problem1 => {
            let class = classify_skew(t).expect("order within switching bound");
            match class.tag {
                SkewClassTag::SwitchOfTransitive => ("switch_of_transitive", None),
                SkewClassTag::SkewConference => ("skew_conference", None),
                SkewClassTag::SwitchOfDoublyRegular => ("switch_of_doubly_regular", None),
                SkewClassTag::Other => ("exception", Some(t.to_text())),
            }
        }
    }
}

/// Index range processed per merge step; also the checkpoint granularity.
const CHUNK: u64 = 1 << 14;

/// Runs a census to completion.
pub fn run_census(params: &CensusParams) -> Result<CensusReport> {
    run_census_from(params, None, &mut |_| {})
}

/// Runs a census, optionally resuming from a checkpoint, invoking
/// `on_checkpoint` after each chunk with the state needed to resume.
pub fn run_census_from(
    params: &CensusParams,
    resume: Option<CensusCheckpoint>,
    on_checkpoint: &mut dyn FnMut(&CensusCheckpoint),
) -> Result<CensusReport> {
    params.validate()?;
    let started = Instant::now();

    let total: u64 = match params.samples {
        Some(count) => count,
        None => 1u64 << (params.n * (params.n - 1) / 2),
    };

    // Sampling draws the whole deterministic mask sequence up front so that
    // resumption sees the identical stream.
    let sample_masks: Option<Vec<u64>> = params.samples.map(|count| {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        let space = 1u64 << (params.n * (params.n - 1) / 2);
        (0..count).map(|_| rng.gen_range(0..space)).collect()
    });

    let mut class_counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut exceptions: Vec<String> = Vec::new();
    let mut next_index: u64 = 0;
    if let Some(cp) = resume {
        if cp.params != *params {
            return Err(Error::CheckpointMismatch(format!(
                "checkpoint was for {:?}",
                cp.params
            )));
        }
        class_counts = cp.class_counts;
        exceptions = cp.exceptions;
        next_index = cp.next_index;
    }

    let pool = match params.jobs {
        1 => None,
        j => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .expect("thread pool"),
        ),
    };

    let eval = |idx: u64| -> (&'static str, Option<String>) {
        let mask = match &sample_masks {
            Some(masks) => masks[idx as usize],
            None => idx,
        };
        let t = tournament_from_pair_mask(params.n, mask);
        classify_instance(&t, params)
    };

    while next_index < total {
        let hi = (next_index + CHUNK).min(total);
        let outcomes: Vec<(&'static str, Option<String>)> = match &pool {
            Some(p) => {
                use rayon::prelude::*;
                p.install(|| (next_index..hi).into_par_iter().map(eval).collect())
            }
            None => (next_index..hi).map(eval).collect(),
        };
        for (key, exception) in outcomes {
            *class_counts.entry(key.to_string()).or_insert(0) += 1;
            if let Some(text) = exception {
                exceptions.push(text);
            }
        }
        next_index = hi;
        on_checkpoint(&CensusCheckpoint {
            params: params.clone(),
            next_index,
            class_counts: class_counts.clone(),
            exceptions: exceptions.clone(),
        });
    }

    let counted: u64 = class_counts.values().sum();
    debug_assert_eq!(counted, total, "class counts must partition the space");

    Ok(CensusReport {
        n: params.n,
        k: params.k,
        mode: params.mode,
        question: params.question,
        sampled: params.samples.is_some(),
        seed: params.samples.map(|_| params.seed),
        samples: params.samples,
        total,
        class_counts,
        exceptions,
        elapsed: started.elapsed(),
    })
}
