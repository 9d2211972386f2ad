//! Presentations of positive examples.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::language::Language;
use crate::Example;

/// One position of a trace: a positive example or the padding symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Option<Example>", into = "Option<Example>")]
pub enum TraceEntry {
    Blank,
    Value(Example),
}

impl TraceEntry {
    pub fn value(self) -> Option<Example> {
        match self {
            TraceEntry::Blank => None,
            TraceEntry::Value(x) => Some(x),
        }
    }
}

impl From<Option<Example>> for TraceEntry {
    fn from(v: Option<Example>) -> Self {
        v.map_or(TraceEntry::Blank, TraceEntry::Value)
    }
}

impl From<TraceEntry> for Option<Example> {
    fn from(e: TraceEntry) -> Self {
        e.value()
    }
}

impl From<Example> for TraceEntry {
    fn from(x: Example) -> Self {
        TraceEntry::Value(x)
    }
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEntry::Blank => f.write_str("⊥"),
            TraceEntry::Value(x) => write!(f, "{x}"),
        }
    }
}

/// Set of examples occurring in a prefix, padding excluded.
pub fn smpl(prefix: &[TraceEntry]) -> BTreeSet<Example> {
    prefix.iter().filter_map(|e| e.value()).collect()
}

/// How a trace enumerates its language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Schedule {
    /// Members in ascending order, then the largest member forever.
    Canonical,
    /// Independent uniform draws from the members.
    SeededRandom,
    /// Repeated seeded shuffles of the members with padding mixed in.
    PaddedSeeded,
}

impl Schedule {
    pub fn name(self) -> &'static str {
        match self {
            Schedule::Canonical => "canonical",
            Schedule::SeededRandom => "seeded-random",
            Schedule::PaddedSeeded => "padded-seeded",
        }
    }

    pub fn parse(s: &str) -> Result<Schedule> {
        match s {
            "canonical" => Ok(Schedule::Canonical),
            "seeded-random" | "random" => Ok(Schedule::SeededRandom),
            "padded-seeded" | "padded" => Ok(Schedule::PaddedSeeded),
            other => Err(Error::Config(format!("unknown schedule `{other}`"))),
        }
    }
}

/// A finite prefix of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trace {
    entries: Vec<TraceEntry>,
    /// Harness bookkeeping; engines never read it.
    pub target_hint: Option<String>,
}

impl Trace {
    pub fn new(entries: Vec<TraceEntry>) -> Self {
        Trace {
            entries,
            target_hint: None,
        }
    }

    pub fn with_hint(mut self, hint: impl Into<String>) -> Self {
        self.target_hint = Some(hint.into());
        self
    }

    /// The first `k` entries.
    pub fn prefix(&self, k: usize) -> &[TraceEntry] {
        &self.entries[..k.min(self.entries.len())]
    }

    pub fn entries(&self) -> &[TraceEntry] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<TraceEntry> {
        self.entries.get(i).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Longest span between two consecutive rounds of a fair schedule.
    pub fn fairness_horizon(schedule: Schedule, members: usize) -> Option<usize> {
        match schedule {
            Schedule::Canonical => Some(members),
            Schedule::PaddedSeeded => Some(2 * members),
            Schedule::SeededRandom => None,
        }
    }
}

/// Generates `length` entries presenting `language`.
pub fn trace_generate(
    language: &Language,
    schedule: Schedule,
    seed: u64,
    length: usize,
) -> Result<Trace> {
    let members = language.members();
    let hint = language.descriptor().to_string();
    if length == 0 {
        return Ok(Trace::new(Vec::new()).with_hint(hint));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = match schedule {
        Schedule::Canonical => {
            let last = *members
                .last()
                .ok_or_else(|| Error::EmptyLanguage(hint.clone()))?;
            members
                .iter()
                .copied()
                .chain(std::iter::repeat(last))
                .take(length)
                .map(TraceEntry::Value)
                .collect()
        }
        Schedule::SeededRandom if members.is_empty() => vec![TraceEntry::Blank; length],
        Schedule::SeededRandom => (0..length)
            .map(|_| TraceEntry::Value(members[rng.gen_range(0..members.len())]))
            .collect(),
        Schedule::PaddedSeeded if members.is_empty() => vec![TraceEntry::Blank; length],
        Schedule::PaddedSeeded => {
            let mut out = Vec::with_capacity(length);
            let mut round = members.clone();
            while out.len() < length {
                round.shuffle(&mut rng);
                for &m in &round {
                    if rng.gen_ratio(1, 3) {
                        out.push(TraceEntry::Blank);
                    }
                    out.push(TraceEntry::Value(m));
                }
            }
            out.truncate(length);
            out
        }
    };
    Ok(Trace::new(entries).with_hint(hint))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::ElementOrder;
    use TraceEntry::{Blank, Value};

    fn upto(i: Example) -> Language {
        Language::from_predicate(format!("L_{i}"), i + 2, ElementOrder::Natural, move |n| {
            n <= i
        })
    }

    #[test]
    fn smpl_examples() {
        assert_eq!(
            smpl(&[Blank, Value(3), Blank, Value(3), Value(5)]),
            BTreeSet::from([3, 5])
        );
        assert!(smpl(&[]).is_empty());
        assert!(smpl(&[Blank, Blank]).is_empty());
    }

    #[test]
    fn canonical_enumerates_then_repeats() {
        let t = trace_generate(&upto(3), Schedule::Canonical, 0, 4).unwrap();
        assert_eq!(t.entries(), &[Value(0), Value(1), Value(2), Value(3)]);
        let t = trace_generate(&upto(3), Schedule::Canonical, 0, 6).unwrap();
        assert_eq!(
            t.entries(),
            &[Value(0), Value(1), Value(2), Value(3), Value(3), Value(3)]
        );
        assert_eq!(t.prefix(2), &[Value(0), Value(1)]);
        assert_eq!(t.prefix(99).len(), 6);
    }

    #[test]
    fn zero_length_and_empty_language() {
        for s in [
            Schedule::Canonical,
            Schedule::SeededRandom,
            Schedule::PaddedSeeded,
        ] {
            assert!(trace_generate(&upto(3), s, 9, 0).unwrap().is_empty());
        }
        let empty = Language::finite("∅", 5, ElementOrder::Natural, BTreeSet::new());
        assert!(matches!(
            trace_generate(&empty, Schedule::Canonical, 0, 3),
            Err(Error::EmptyLanguage(_))
        ));
        let t = trace_generate(&empty, Schedule::PaddedSeeded, 0, 3).unwrap();
        assert_eq!(t.entries(), &[Blank, Blank, Blank]);
    }

    #[test]
    fn seeded_schedules_are_reproducible_and_sound() {
        let l = upto(9);
        for s in [Schedule::SeededRandom, Schedule::PaddedSeeded] {
            let a = trace_generate(&l, s, 42, 200).unwrap();
            let b = trace_generate(&l, s, 42, 200).unwrap();
            assert_eq!(a, b);
            assert!(smpl(a.entries()).iter().all(|&x| l.contains(x)));
        }
    }

    #[test]
    fn padded_schedule_is_fair() {
        let l = upto(9);
        let members = l.members();
        let horizon = Trace::fairness_horizon(Schedule::PaddedSeeded, members.len()).unwrap();
        let t = trace_generate(&l, Schedule::PaddedSeeded, 7, horizon).unwrap();
        assert_eq!(smpl(t.entries()), members.into_iter().collect());
    }

    #[test]
    fn entries_serialize_as_nullable_numbers() {
        let json = serde_json::to_string(&[Blank, Value(4)]).unwrap();
        assert_eq!(json, "[null,4]");
        let back: Vec<TraceEntry> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![Blank, Value(4)]);
    }
}
