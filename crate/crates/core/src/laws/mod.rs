//! Laws, non-law witnesses and the shortest-law length `ν(G)`.
//!
//! A law is only ever reported after the whole tuple space has been checked;
//! sampling can refute a law but never confirm one.
//!
//! Exhaustive checks restrict the first variable to conjugacy class
//! representatives: `w(g_1^x, ..., g_k^x) = w(g_1, ..., g_k)^x`, so a tuple is a
//! witness exactly when its conjugates are.

pub(crate) mod scan;

use std::fmt;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, Ordering};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::freeword::{enumerate_words, FreeWord, Symmetry};
use crate::grpstruct::nonsolvable_length;
use crate::permgroup::{PermGroup, Permutation};
use scan::TupleScan;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Default probe budget for witness searches.
pub const DEFAULT_BUDGET: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawStatus {
    LawProved,
    NonLawWitness,
    Inconclusive,
}

impl fmt::Display for LawStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LawStatus::LawProved => "law-proved",
            LawStatus::NonLawWitness => "non-law-witness",
            LawStatus::Inconclusive => "inconclusive",
        })
    }
}

/// Which search phase produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    Random,
    Systematic,
    Exhaustive,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub word: FreeWord,
    pub status: LawStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Permutation>>,
    pub tuples_checked: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phase: Option<Phase>,
    /// Why an inconclusive result stopped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl LawReport {
    fn new(word: &FreeWord, status: LawStatus, tuples_checked: u128) -> LawReport {
        LawReport {
            word: word.clone(),
            status,
            witness: None,
            tuples_checked,
            phase: None,
            reason: None,
        }
    }

    fn witnessed(word: &FreeWord, tuple: Vec<Permutation>, checked: u128, phase: Phase) -> LawReport {
        LawReport {
            witness: Some(tuple),
            phase: Some(phase),
            ..LawReport::new(word, LawStatus::NonLawWitness, checked)
        }
    }

    fn inconclusive(word: &FreeWord, checked: u128, reason: impl Into<String>) -> LawReport {
        LawReport {
            reason: Some(reason.into()),
            ..LawReport::new(word, LawStatus::Inconclusive, checked)
        }
    }
}

/// Searches for a tuple with `w(ḡ) ≠ 1`: half the budget on seeded uniform
/// random tuples, the rest on a systematic scan in chain order.
pub fn non_law_witness(g: &PermGroup, w: &FreeWord, budget: u64, seed: u64) -> LawReport {
    let k = w.num_vars();
    if k == 0 || g.is_trivial() {
        return LawReport::inconclusive(w, 0, "no tuple can be a witness");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = budget.div_ceil(2);
    let mut checked = 0u128;
    for _ in 0..random {
        let tuple: Vec<Permutation> = (0..k).map(|_| g.random_element(&mut rng)).collect();
        checked += 1;
        if !w.evaluate(&tuple).expect("tuple in one degree").is_identity() {
            return LawReport::witnessed(w, tuple, checked, Phase::Random);
        }
    }
    let remaining = budget - random;
    if remaining == 0 {
        return LawReport::inconclusive(w, checked, "budget exhausted");
    }
    // The scan walks the last variable fastest, so only the first `remaining`
    // chain elements can ever be reached by it.
    let pool: Vec<Permutation> = g
        .chain_elements()
        .take(remaining.min(usize::MAX as u64) as usize)
        .collect();
    let scan = TupleScan::new(w, g.degree(), &pool, &pool);
    let mut found = None;
    let mut left = remaining;
    let _ = scan.run(&mut |idx, value| {
        checked += 1;
        left -= 1;
        if !value.is_identity() {
            found = Some(idx.to_vec());
            return ControlFlow::Break(());
        }
        if left == 0 {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    match found {
        Some(idx) => {
            let tuple = idx.iter().map(|&i| pool[i].clone()).collect();
            LawReport::witnessed(w, tuple, checked, Phase::Systematic)
        }
        None => LawReport::inconclusive(w, checked, "budget exhausted"),
    }
}

/// Decides whether `w` is a law by exhausting the tuple space (first variable
/// over class representatives). Beyond the caps the result is inconclusive.
/// With `workers > 1` the class representatives are split across threads.
pub fn is_law(g: &PermGroup, w: &FreeWord, caps: &Caps, workers: usize) -> LawReport {
    if w.num_vars() == 0 || g.is_trivial() {
        return LawReport {
            phase: Some(Phase::Exhaustive),
            ..LawReport::new(w, LawStatus::LawProved, 1)
        };
    }
    if g.order() > caps.element_cap {
        return LawReport::inconclusive(
            w,
            0,
            format!("group order {} exceeds element cap {}", g.order(), caps.element_cap),
        );
    }
    let (elements, reps) = match (
        g.elements(caps.element_cap),
        g.conjugacy_class_reps(caps.element_cap),
    ) {
        (Ok(e), Ok(r)) => (e, r),
        (Err(e), _) | (_, Err(e)) => return LawReport::inconclusive(w, 0, e.to_string()),
    };
    let scan = TupleScan::new(w, g.degree(), &reps, &elements);
    let size = scan.size().unwrap_or(u128::MAX);
    if size > caps.tuple_cap {
        return LawReport::inconclusive(
            w,
            0,
            format!("{size} tuples exceed tuple cap {}", caps.tuple_cap),
        );
    }

    let tuple_of = |idx: &[usize]| -> Vec<Permutation> {
        idx.iter()
            .enumerate()
            .map(|(v, &i)| scan.element(v, i).clone())
            .collect()
    };

    if workers <= 1 {
        let mut checked = 0u128;
        let mut found = None;
        let _ = scan.run(&mut |idx, value| {
            checked += 1;
            if value.is_identity() {
                ControlFlow::Continue(())
            } else {
                found = Some(idx.to_vec());
                ControlFlow::Break(())
            }
        });
        return match found {
            Some(idx) => LawReport::witnessed(w, tuple_of(&idx), checked, Phase::Exhaustive),
            None => LawReport {
                phase: Some(Phase::Exhaustive),
                ..LawReport::new(w, LawStatus::LawProved, checked)
            },
        };
    }

    let cancel = AtomicBool::new(false);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let results: Vec<(u128, Option<Vec<usize>>)> = pool.install(|| {
        (0..reps.len())
            .into_par_iter()
            .map(|shard| {
                let mut checked = 0u128;
                let mut found = None;
                let _ = scan.run_shard(shard, Some(&cancel), &mut |idx, value| {
                    checked += 1;
                    if value.is_identity() {
                        ControlFlow::Continue(())
                    } else {
                        found = Some(idx.to_vec());
                        cancel.store(true, Ordering::Relaxed);
                        ControlFlow::Break(())
                    }
                });
                (checked, found)
            })
            .collect()
    });
    let checked = results.iter().map(|r| r.0).sum();
    match results.into_iter().find_map(|r| r.1) {
        Some(idx) => LawReport::witnessed(w, tuple_of(&idx), checked, Phase::Exhaustive),
        None => LawReport {
            phase: Some(Phase::Exhaustive),
            ..LawReport::new(w, LawStatus::LawProved, checked)
        },
    }
}

/// Witness search first, then an exhaustive check when the search is inconclusive.
pub fn decide_law(g: &PermGroup, w: &FreeWord, caps: &Caps, seed: u64, workers: usize) -> LawReport {
    let budget = DEFAULT_BUDGET.min(g.order().saturating_mul(4).min(u64::MAX as u128) as u64);
    let probe = non_law_witness(g, w, budget, seed);
    if probe.status == LawStatus::NonLawWitness {
        return probe;
    }
    let mut exact = is_law(g, w, caps, workers);
    exact.tuples_checked += probe.tuples_checked;
    exact
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "length")]
pub enum NuValue {
    Exact(usize),
    /// Every word up to this length is known not to be a law.
    GreaterThan(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct NuReport {
    pub value: NuValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub law: Option<FreeWord>,
    /// Words whose status could not be decided; the search stops at their length.
    pub undecided: Vec<LawReport>,
    pub words_checked: usize,
}

impl fmt::Display for NuReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.value, &self.law) {
            (NuValue::Exact(n), Some(w)) => write!(f, "nu = {n} (law: {w})"),
            (NuValue::Exact(n), None) => write!(f, "nu = {n}"),
            (NuValue::GreaterThan(n), _) => {
                write!(f, "nu > {n}")?;
                if !self.undecided.is_empty() {
                    let words: Vec<String> =
                        self.undecided.iter().map(|r| r.word.to_string()).collect();
                    write!(f, " (undecided: {})", words.join(", "))?;
                }
                Ok(())
            }
        }
    }
}

/// Shortest law length up to `max_len`, scanning canonical words at `level`.
pub fn nu_with_symmetry(
    g: &PermGroup,
    max_len: usize,
    level: Symmetry,
    caps: &Caps,
    seed: u64,
    workers: usize,
) -> NuReport {
    let mut words_checked = 0;
    for len in 1..=max_len {
        let mut undecided = Vec::new();
        for w in enumerate_words(len, level) {
            words_checked += 1;
            let r = decide_law(g, &w, caps, seed, workers);
            match r.status {
                LawStatus::LawProved => {
                    return NuReport {
                        value: NuValue::Exact(len),
                        law: Some(w),
                        undecided,
                        words_checked,
                    }
                }
                LawStatus::NonLawWitness => {}
                LawStatus::Inconclusive => undecided.push(r),
            }
        }
        if !undecided.is_empty() {
            return NuReport {
                value: NuValue::GreaterThan(len - 1),
                law: None,
                undecided,
                words_checked,
            };
        }
    }
    NuReport {
        value: NuValue::GreaterThan(max_len),
        law: None,
        undecided: Vec::new(),
        words_checked,
    }
}

/// [`nu_with_symmetry`] over the full symmetry reduction.
pub fn nu(g: &PermGroup, max_len: usize, caps: &Caps, seed: u64, workers: usize) -> NuReport {
    nu_with_symmetry(g, max_len, Symmetry::Full, caps, seed, workers)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremStatus {
    Pass,
    Fail,
    FailToDecide,
}

impl TheoremStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            TheoremStatus::Pass => 0,
            TheoremStatus::Fail => 1,
            TheoremStatus::FailToDecide => 2,
        }
    }

    /// Worst of two statuses: any failure dominates, then undecided.
    pub fn and(self, other: TheoremStatus) -> TheoremStatus {
        use TheoremStatus::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (FailToDecide, _) | (_, FailToDecide) => FailToDecide,
            _ => Pass,
        }
    }
}

impl fmt::Display for TheoremStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremStatus::Pass => "PASS",
            TheoremStatus::Fail => "FAIL",
            TheoremStatus::FailToDecide => "FAIL-TO-DECIDE",
        })
    }
}

/// Outcome of checking that no short word is a law.
#[derive(Clone, Debug, Serialize)]
pub struct NonLawReport {
    pub lambda: usize,
    pub status: TheoremStatus,
    pub words: Vec<LawReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Every canonical word of length at most `λ(G)` must have a witness.
/// A proved law is a failure; an undecided word makes the result undecided.
pub fn verify_theorem_a(g: &PermGroup, caps: &Caps, seed: u64) -> NonLawReport {
    let lambda = match nonsolvable_length(g, caps) {
        Ok(l) => l,
        Err(e) => {
            return NonLawReport {
                lambda: 0,
                status: TheoremStatus::FailToDecide,
                words: Vec::new(),
                error: Some(e.to_string()),
            }
        }
    };
    let mut status = TheoremStatus::Pass;
    let mut words = Vec::new();
    for len in 1..=lambda {
        for w in enumerate_words(len, Symmetry::Full) {
            let r = decide_law(g, &w, caps, seed, 1);
            status = status.and(match r.status {
                LawStatus::NonLawWitness => TheoremStatus::Pass,
                LawStatus::LawProved => TheoremStatus::Fail,
                LawStatus::Inconclusive => TheoremStatus::FailToDecide,
            });
            words.push(r);
        }
    }
    NonLawReport {
        lambda,
        status,
        words,
        error: None,
    }
}
