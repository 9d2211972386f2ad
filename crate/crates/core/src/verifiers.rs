//! Subset-query oracles over a bounded universe.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::language::Language;
use crate::trace::{smpl, TraceEntry};
use crate::Example;

/// Answer to a subset query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Option<Example>", into = "Option<Example>")]
pub enum Verdict {
    /// The candidate is contained in the target.
    NoCounterexample,
    Counterexample(Example),
}

impl Verdict {
    /// Builds a counterexample verdict, refusing unsound witnesses.
    pub fn refute(e: Example, candidate: &Language, target: &Language) -> Result<Verdict> {
        if !candidate.contains(e) || target.contains(e) {
            return Err(Error::EngineFault(format!(
                "{e} is not in {candidate} \\ {target}"
            )));
        }
        Ok(Verdict::Counterexample(e))
    }

    pub fn cex(self) -> Option<Example> {
        match self {
            Verdict::NoCounterexample => None,
            Verdict::Counterexample(e) => Some(e),
        }
    }

    pub fn is_refutation(self) -> bool {
        matches!(self, Verdict::Counterexample(_))
    }
}

impl From<Option<Example>> for Verdict {
    fn from(v: Option<Example>) -> Self {
        v.map_or(Verdict::NoCounterexample, Verdict::Counterexample)
    }
}

impl From<Verdict> for Option<Example> {
    fn from(v: Verdict) -> Self {
        v.cex()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NoCounterexample => f.write_str("⊥"),
            Verdict::Counterexample(e) => write!(f, "{e}"),
        }
    }
}

/// How `check` picks among several counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CexStrategy {
    /// Smallest code.
    FirstFound,
    /// Uniform choice, reproducible from the seed and the difference set.
    SeededRandom(u64),
    /// Largest code.
    AdversarialMax,
    /// Smallest code outside the avoid set.
    ConsistentAvoiding(BTreeSet<Example>),
}

impl CexStrategy {
    pub const NAMES: [&'static str; 4] = [
        "first-found",
        "seeded-random",
        "adversarial-max",
        "consistent-avoiding",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CexStrategy::FirstFound => "first-found",
            CexStrategy::SeededRandom(_) => "seeded-random",
            CexStrategy::AdversarialMax => "adversarial-max",
            CexStrategy::ConsistentAvoiding(_) => "consistent-avoiding",
        }
    }

    pub fn from_parts(name: &str, seed: u64, avoid: &[Example]) -> Result<CexStrategy> {
        match name {
            "first-found" => Ok(CexStrategy::FirstFound),
            "seeded-random" => Ok(CexStrategy::SeededRandom(seed)),
            "adversarial-max" => Ok(CexStrategy::AdversarialMax),
            "consistent-avoiding" => Ok(CexStrategy::ConsistentAvoiding(
                avoid.iter().copied().collect(),
            )),
            other => Err(Error::Config(format!(
                "unknown strategy {other:?}; expected one of {}",
                Self::NAMES.join(", ")
            ))),
        }
    }

    /// Picks one element of the ascending, nonempty `diff`.
    fn select(&self, diff: &[Example], candidate: &Language) -> Result<Example> {
        match self {
            CexStrategy::FirstFound => Ok(diff[0]),
            CexStrategy::AdversarialMax => Ok(diff[diff.len() - 1]),
            CexStrategy::SeededRandom(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(mix(*seed, diff));
                Ok(diff[rng.gen_range(0..diff.len())])
            }
            CexStrategy::ConsistentAvoiding(avoid) => diff
                .iter()
                .copied()
                .find(|e| !avoid.contains(e))
                .ok_or_else(|| Error::StrategyInfeasible {
                    candidate: candidate.descriptor().to_string(),
                }),
        }
    }
}

impl fmt::Display for CexStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CexStrategy::SeededRandom(s) => write!(f, "seeded-random({s})"),
            other => f.write_str(other.name()),
        }
    }
}

// Folds the difference set into the seed so that equal queries get equal
// answers without any state carried between calls.
fn mix(seed: u64, diff: &[Example]) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &x in diff {
        h = (h ^ x).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h ^= h >> 31;
    }
    h
}

fn same_bound(candidate: &Language, target: &Language) -> Result<()> {
    if candidate.universe_bound() != target.universe_bound() {
        return Err(Error::BoundMismatch {
            candidate: candidate.universe_bound(),
            target: target.universe_bound(),
        });
    }
    Ok(())
}

/// `(candidate \ target) ∩ [0, B]`, ascending.
pub fn difference(candidate: &Language, target: &Language) -> Result<Vec<Example>> {
    same_bound(candidate, target)?;
    Ok(candidate
        .members()
        .into_iter()
        .filter(|&x| !target.contains(x))
        .collect())
}

/// Arbitrary-counterexample oracle.
pub fn check(candidate: &Language, target: &Language, strategy: &CexStrategy) -> Result<Verdict> {
    let diff = difference(candidate, target)?;
    if diff.is_empty() {
        return Ok(Verdict::NoCounterexample);
    }
    let e = strategy.select(&diff, candidate)?;
    Verdict::refute(e, candidate, target)
}

/// Minimal-counterexample oracle under the candidate's element order.
pub fn mincheck(candidate: &Language, target: &Language) -> Result<Verdict> {
    let diff = difference(candidate, target)?;
    match candidate.order().min_of(diff) {
        None => Ok(Verdict::NoCounterexample),
        Some(e) => Verdict::refute(e, candidate, target),
    }
}

/// History-bounded oracle: the smallest counterexample below the largest
/// example seen so far, or ⊥ when there is none.
pub fn hcheck(candidate: &Language, target: &Language, history: &[TraceEntry]) -> Result<Verdict> {
    hcheck_below(candidate, target, smpl(history).last().copied())
}

/// [`hcheck`] with the history already reduced to its largest example.
pub fn hcheck_below(
    candidate: &Language,
    target: &Language,
    ceiling: Option<Example>,
) -> Result<Verdict> {
    let diff = difference(candidate, target)?;
    let Some(ceiling) = ceiling else {
        return Ok(Verdict::NoCounterexample);
    };
    match diff.into_iter().find(|&m| m < ceiling) {
        None => Ok(Verdict::NoCounterexample),
        Some(m) => Verdict::refute(m, candidate, target),
    }
}
