//! Cache of minimal counterexamples and replay through it.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::program::{Index, Program};
use crate::trace::TraceEntry;
use crate::verifiers::Verdict;
use crate::Example;

use super::{Generalizer, MacroStep};

/// What is known about a program's minimal counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lce {
    /// ⊤: not determined yet.
    Unknown,
    /// ⊥: the program's language lies inside the target.
    NoCounterexample,
    Minimal(Example),
}

impl Lce {
    pub fn verdict(self) -> Option<Verdict> {
        match self {
            Lce::Unknown => None,
            Lce::NoCounterexample => Some(Verdict::NoCounterexample),
            Lce::Minimal(e) => Some(Verdict::Counterexample(e)),
        }
    }
}

impl fmt::Display for Lce {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lce::Unknown => f.write_str("⊤"),
            Lce::NoCounterexample => f.write_str("⊥"),
            Lce::Minimal(e) => write!(f, "{e}"),
        }
    }
}

/// Finite map from programs to [`Lce`], ⊤ everywhere else.
///
/// Entries are keyed by index: the minimal counterexample depends on the
/// language only, so programs sharing an index share the entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LceMap {
    entries: BTreeMap<Index, Lce>,
}

impl LceMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, p: &Program) -> Lce {
        self.entries.get(&p.index).copied().unwrap_or(Lce::Unknown)
    }

    /// Records a determined value; a known entry never changes.
    pub fn set(&mut self, p: &Program, value: Lce) -> Result<()> {
        if value == Lce::Unknown {
            return Ok(());
        }
        match self.entries.insert(p.index.clone(), value) {
            Some(old) if old != value => Err(Error::InconsistentOracle(format!(
                "minimal counterexample of {} changed from {old} to {value}",
                p.index
            ))),
            _ => Ok(()),
        }
    }

    /// Number of non-⊤ entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Index, Lce)> {
        self.entries.iter().map(|(k, v)| (k, *v))
    }
}

impl FromIterator<(Index, Lce)> for LceMap {
    fn from_iter<I: IntoIterator<Item = (Index, Lce)>>(iter: I) -> Self {
        LceMap {
            entries: iter
                .into_iter()
                .filter(|(_, v)| *v != Lce::Unknown)
                .collect(),
        }
    }
}

/// Outcome of replaying a prefix through the cache.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Replay {
    Defined(Program),
    /// The cache had no entry for `at`, reached after `consumed` entries.
    Undefined {
        at: Program,
        consumed: usize,
    },
}

/// Replays `prefix` from `p0`, feeding each step the cached minimal
/// counterexample of the previous program. Replay ends early, and is still
/// defined, once a frozen program is reached.
pub fn t_lce_replay(
    lce: &LceMap,
    p0: &Program,
    prefix: &[TraceEntry],
    generalizer: &Generalizer,
) -> Result<Replay> {
    let mut steps = Vec::new();
    let (p, consumed) = replay_into(
        lce,
        p0.clone(),
        prefix.iter().copied(),
        generalizer,
        &mut steps,
    )?;
    if consumed == prefix.len() || p.is_frozen() {
        Ok(Replay::Defined(p))
    } else {
        Ok(Replay::Undefined { at: p, consumed })
    }
}

/// Advances from `p` while the cache knows the current program. Returns the
/// reached program and the number of entries used.
pub(crate) fn replay_into(
    lce: &LceMap,
    mut p: Program,
    entries: impl IntoIterator<Item = TraceEntry>,
    generalizer: &Generalizer,
    steps: &mut Vec<MacroStep>,
) -> Result<(Program, usize)> {
    let mut consumed = 0;
    for entry in entries {
        // Frozen programs are fixpoints; the engines stop there.
        if p.is_frozen() {
            break;
        }
        let Some(verdict) = lce.get(&p).verdict() else {
            break;
        };
        let next = generalizer.step(&p, entry, verdict)?;
        steps.push(MacroStep {
            from: p,
            entry,
            verdict,
            to: next.clone(),
        });
        p = next;
        consumed += 1;
    }
    Ok((p, consumed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use TraceEntry::Value;

    #[test]
    fn empty_prefix_returns_start() {
        let g = Generalizer::chain(10);
        let r = t_lce_replay(&LceMap::new(), &g.initial(), &[], &g).unwrap();
        assert_eq!(r, Replay::Defined(g.initial()));
    }

    #[test]
    fn unknown_start_is_undefined() {
        let g = Generalizer::chain(10);
        let r = t_lce_replay(&LceMap::new(), &g.initial(), &[Value(0)], &g).unwrap();
        assert_eq!(
            r,
            Replay::Undefined {
                at: g.initial(),
                consumed: 0
            }
        );
    }

    #[test]
    fn replays_a_chain_run() {
        let g = Generalizer::chain(10);
        let lce: LceMap = (0..=10)
            .map(|i| {
                let v = if i == 6 {
                    Lce::Minimal(6)
                } else {
                    Lce::NoCounterexample
                };
                (Index::Chain(i), v)
            })
            .collect();
        let prefix: Vec<_> = [0, 1, 2, 3, 4, 5, 5, 5, 5].map(Value).to_vec();
        let r = t_lce_replay(&lce, &g.initial(), &prefix, &g).unwrap();
        assert_eq!(r, Replay::Defined(Program::frozen(Index::Chain(5))));
    }

    #[test]
    fn entries_are_write_once() {
        let mut lce = LceMap::new();
        let p = Program::new(Index::Chain(3));
        lce.set(&p, Lce::Minimal(2)).unwrap();
        lce.set(&p, Lce::Minimal(2)).unwrap();
        assert!(lce.set(&p, Lce::NoCounterexample).is_err());
        lce.set(&Program::new(Index::Chain(4)), Lce::Unknown)
            .unwrap();
        assert_eq!(lce.len(), 1);
    }
}
