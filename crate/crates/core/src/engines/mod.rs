//! Synthesis engines: the counterexample-guided recursion under each
//! verifier, and the simulation of the minimal-counterexample engine by
//! the arbitrary-counterexample one.

mod generalizers;
mod lce;
mod simulation;

pub use generalizers::Generalizer;
pub use lce::{t_lce_replay, Lce, LceMap, Replay};
pub use simulation::simulate_min_via_arbitrary;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::language::Language;
use crate::program::Program;
use crate::trace::{Trace, TraceEntry};
use crate::verifiers::{check, hcheck_below, mincheck, CexStrategy, Verdict};
use crate::Example;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EngineVariant {
    /// Arbitrary counterexamples.
    Cegis,
    /// Minimal counterexamples.
    #[serde(rename = "mincegis")]
    MinCegis,
    /// Counterexamples below the largest example seen.
    #[serde(rename = "hcegis")]
    HCegis,
    /// Minimal counterexamples reconstructed from arbitrary ones.
    SimulatedMinCegis,
    /// No counterexample channel at all: the verifier always answers ⊥.
    PositiveOnly,
}

impl EngineVariant {
    pub const NAMES: [&'static str; 5] = [
        "cegis",
        "mincegis",
        "hcegis",
        "simulated-mincegis",
        "positive-only",
    ];

    pub fn name(self) -> &'static str {
        match self {
            EngineVariant::Cegis => "cegis",
            EngineVariant::MinCegis => "mincegis",
            EngineVariant::HCegis => "hcegis",
            EngineVariant::SimulatedMinCegis => "simulated-mincegis",
            EngineVariant::PositiveOnly => "positive-only",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::NAMES
            .iter()
            .position(|n| *n == s)
            .map(|k| {
                [
                    EngineVariant::Cegis,
                    EngineVariant::MinCegis,
                    EngineVariant::HCegis,
                    EngineVariant::SimulatedMinCegis,
                    EngineVariant::PositiveOnly,
                ][k]
            })
            .ok_or_else(|| {
                Error::Config(format!(
                    "unknown engine {s:?}; expected one of {}",
                    Self::NAMES.join(", ")
                ))
            })
    }
}

impl fmt::Display for EngineVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What an iteration did.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Event {
    /// The verifier was asked about a conjecture.
    Conjecture,
    /// The verifier was asked about a membership probe.
    Probe,
    /// A cached minimal counterexample was used; no verifier call.
    Replay,
    /// The generalizer settled; the run ends.
    Freeze,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationRecord {
    pub iter: usize,
    pub entry: TraceEntry,
    /// The program the verdict is about.
    pub candidate: Program,
    /// Element probed by the simulation, when this is a probe.
    pub probe: Option<Example>,
    pub verdict: Verdict,
    pub event: Event,
}

impl IterationRecord {
    pub fn is_query(&self) -> bool {
        matches!(self.event, Event::Conjecture | Event::Probe)
    }
}

/// One application of the generalizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacroStep {
    pub from: Program,
    pub entry: TraceEntry,
    pub verdict: Verdict,
    pub to: Program,
}

#[derive(Debug, Clone)]
pub struct RunSettings {
    pub budget: usize,
    pub strategy: CexStrategy,
}

impl RunSettings {
    pub fn new(budget: usize) -> Self {
        RunSettings {
            budget,
            strategy: CexStrategy::FirstFound,
        }
    }

    pub fn with_strategy(mut self, strategy: CexStrategy) -> Self {
        self.strategy = strategy;
        self
    }
}

#[derive(Debug, Clone)]
pub struct EngineRun {
    pub variant: EngineVariant,
    pub family: Family,
    pub generalizer: Generalizer,
    pub budget: usize,
    pub records: Vec<IterationRecord>,
    pub macro_steps: Vec<MacroStep>,
    pub final_program: Program,
    /// Final cache of the simulation.
    pub lce: Option<LceMap>,
}

impl EngineRun {
    /// Verifier calls made.
    pub fn queries(&self) -> usize {
        self.records.iter().filter(|r| r.is_query()).count()
    }

    /// Counterexamples returned by the verifier.
    pub fn counterexamples(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.is_query() && r.verdict.is_refutation())
            .count()
    }

    /// Iteration at which the generalizer settled, if it did.
    pub fn frozen_at(&self) -> Option<usize> {
        self.records
            .last()
            .filter(|r| r.event == Event::Freeze)
            .map(|r| r.iter)
    }

    /// Distinct conjectures, in order of first appearance.
    pub fn conjectures(&self) -> Vec<Program> {
        let mut out: Vec<Program> = Vec::new();
        for r in self.records.iter().filter(|r| r.event == Event::Conjecture) {
            if out.last().map(|p| &p.index) != Some(&r.candidate.index) {
                out.push(r.candidate.clone());
            }
        }
        out
    }
}

fn language_of(family: &Family, p: &Program) -> Result<Language> {
    family.program_language(p).map_err(|e| match e {
        Error::EngineFault(_) => e,
        other => Error::EngineFault(format!("generalizer proposed {p}: {other}")),
    })
}

fn require_trace(trace: &Trace, budget: usize) -> Result<()> {
    if trace.len() < budget {
        return Err(Error::TraceTooShort {
            len: trace.len(),
            budget,
        });
    }
    Ok(())
}

/// Runs the recursion `P_n = F(P_{n-1}, τ(n), cex(n))` for up to `budget`
/// iterations, where `cex(n)` is the variant's verifier applied to
/// `P_{n-1}`. Stops early once the generalizer settles.
pub fn run_engine(
    variant: EngineVariant,
    family: &Family,
    target: &Language,
    trace: &Trace,
    generalizer: &Generalizer,
    settings: &RunSettings,
) -> Result<EngineRun> {
    if variant == EngineVariant::SimulatedMinCegis {
        return simulate_min_via_arbitrary(family, target, trace, generalizer, settings);
    }
    require_trace(trace, settings.budget)?;
    let mut p = generalizer.initial();
    language_of(family, &p)?;
    let mut records = Vec::new();
    let mut macro_steps = Vec::new();
    // Largest example among τ(1..n-1), the history bound of hcheck.
    let mut ceiling: Option<Example> = None;

    for (n, &entry) in trace.entries()[..settings.budget].iter().enumerate() {
        let iter = n + 1;
        let candidate = language_of(family, &p)?;
        let verdict = match variant {
            EngineVariant::Cegis => check(&candidate, target, &settings.strategy)?,
            EngineVariant::MinCegis => mincheck(&candidate, target)?,
            EngineVariant::HCegis => hcheck_below(&candidate, target, ceiling)?,
            EngineVariant::PositiveOnly => Verdict::NoCounterexample,
            EngineVariant::SimulatedMinCegis => unreachable!("delegated above"),
        };
        records.push(IterationRecord {
            iter,
            entry,
            candidate: p.clone(),
            probe: None,
            verdict,
            event: if p.is_probe() {
                Event::Probe
            } else {
                Event::Conjecture
            },
        });
        let next = generalizer.step(&p, entry, verdict)?;
        language_of(family, &next)?;
        macro_steps.push(MacroStep {
            from: p,
            entry,
            verdict,
            to: next.clone(),
        });
        p = next;
        if let Some(x) = entry.value() {
            ceiling = Some(ceiling.map_or(x, |c| c.max(x)));
        }
        if p.is_frozen() {
            records.push(IterationRecord {
                iter,
                entry,
                candidate: p.clone(),
                probe: None,
                verdict: Verdict::NoCounterexample,
                event: Event::Freeze,
            });
            break;
        }
    }

    Ok(EngineRun {
        variant,
        family: *family,
        generalizer: generalizer.clone(),
        budget: settings.budget,
        records,
        macro_steps,
        final_program: p,
        lce: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{ChainFamily, GoldFamily, RectangleFamily};
    use crate::pairing::point_decode;
    use crate::program::{GoldVariant, Index, RectBounds};
    use crate::trace::{trace_generate, Schedule};

    fn chain_run(variant: EngineVariant, i: u64, budget: usize) -> EngineRun {
        let fam = Family::Chain(ChainFamily::default());
        let target = fam.language(&Index::Chain(i)).unwrap();
        let trace = trace_generate(&target, Schedule::Canonical, 0, budget).unwrap();
        run_engine(
            variant,
            &fam,
            &target,
            &trace,
            &Generalizer::for_family(&fam),
            &RunSettings::new(budget),
        )
        .unwrap()
    }

    #[test]
    fn cegis_identifies_a_chain_member() {
        let run = chain_run(EngineVariant::Cegis, 5, 100);
        assert_eq!(run.final_program, Program::frozen(Index::Chain(5)));
        let conj: Vec<_> = run.conjectures().into_iter().map(|p| p.index).collect();
        assert_eq!(conj, (0..=6).map(Index::Chain).collect::<Vec<_>>());
        assert_eq!(run.queries(), 7);
        assert_eq!(run.records.len(), 8);
        assert_eq!(run.records[6].verdict, Verdict::Counterexample(6));
        assert_eq!(run.frozen_at(), Some(7));
    }

    #[test]
    fn hcegis_never_refutes_a_chain_guess() {
        let run = chain_run(EngineVariant::HCegis, 5, 100);
        assert_eq!(run.counterexamples(), 0);
        assert_eq!(run.final_program.index, Index::Chain(32));
        assert_eq!(run.queries(), 100);
    }

    #[test]
    fn zero_budget_is_an_empty_run() {
        let run = chain_run(EngineVariant::Cegis, 5, 0);
        assert!(run.records.is_empty());
        assert_eq!(run.final_program, Generalizer::chain(32).initial());
    }

    #[test]
    fn short_trace_is_rejected() {
        let fam = Family::Gold(GoldFamily::default());
        let target = fam.language(&Index::Gold(GoldVariant::Full)).unwrap();
        let trace = trace_generate(&target, Schedule::Canonical, 0, 3).unwrap();
        let err = run_engine(
            EngineVariant::Cegis,
            &fam,
            &target,
            &trace,
            &Generalizer::gold(),
            &RunSettings::new(4),
        )
        .unwrap_err();
        assert_eq!(err, Error::TraceTooShort { len: 3, budget: 4 });
    }

    #[test]
    fn mincegis_on_the_unit_square() {
        let fam = Family::Rectangle(RectangleFamily::default());
        let square = RectBounds::new(-1, 1, -1, 1);
        let target = fam.language(&Index::Rect(square)).unwrap();
        let trace = trace_generate(&target, Schedule::Canonical, 0, 500).unwrap();
        let run = run_engine(
            EngineVariant::MinCegis,
            &fam,
            &target,
            &trace,
            &Generalizer::for_family(&fam),
            &RunSettings::new(500),
        )
        .unwrap();
        assert_eq!(run.final_program.index, Index::Rect(square));
        let cexs: Vec<_> = run
            .records
            .iter()
            .filter_map(|r| r.verdict.cex())
            .map(point_decode)
            .collect();
        assert_eq!(cexs, vec![(-2, 0), (0, -2), (0, 2), (2, 0)]);
    }

    #[test]
    fn wrong_family_program_is_a_fault() {
        let fam = Family::Gold(GoldFamily::default());
        let target = fam.language(&Index::Gold(GoldVariant::Full)).unwrap();
        let trace = trace_generate(&target, Schedule::Canonical, 0, 3).unwrap();
        let err = run_engine(
            EngineVariant::Cegis,
            &fam,
            &target,
            &trace,
            &Generalizer::chain(3),
            &RunSettings::new(3),
        )
        .unwrap_err();
        assert!(matches!(err, Error::EngineFault(_)));
    }

    #[test]
    fn variant_names_round_trip() {
        for n in EngineVariant::NAMES {
            assert_eq!(EngineVariant::parse(n).unwrap().name(), n);
        }
        assert!(EngineVariant::parse("nosuch").is_err());
    }
}
