//! Minimal-counterexample synthesis driven by an arbitrary-counterexample
//! verifier.
//!
//! The simulation keeps a cache of minimal counterexamples and a backlog of
//! trace entries. While the frontier program's minimal counterexample is
//! known, the backlog is replayed through the generalizer exactly as the
//! minimal-counterexample engine would have consumed it. Otherwise the
//! simulation asks whether any counterexample exists, and if so probes
//! `L(P) ∩ {e}` for the elements `e` of the universe in the family order:
//! the first refuted probe names the minimal counterexample. Every
//! micro-step consumes one trace entry.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::language::Language;
use crate::trace::Trace;
use crate::verifiers::{check, Verdict};

use super::lce::replay_into;
use super::{
    language_of, require_trace, EngineRun, EngineVariant, Event, Generalizer, IterationRecord, Lce,
    LceMap, RunSettings,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    LockStep,
    /// Searching for the minimal counterexample; `mu` indexes the universe
    /// in the family order.
    Probing {
        mu: usize,
    },
}

pub fn simulate_min_via_arbitrary(
    family: &Family,
    target: &Language,
    trace: &Trace,
    generalizer: &Generalizer,
    settings: &RunSettings,
) -> Result<EngineRun> {
    require_trace(trace, settings.budget)?;
    let universe = family.order().sorted_universe(family.universe_bound());
    // A refutation must be found within one sweep of the universe.
    let stall_limit = universe.len() + 2;

    let mut lce = LceMap::new();
    let mut p_last = generalizer.initial();
    let mut phase = Phase::LockStep;
    let mut backlog = VecDeque::new();
    let mut tau_done = 0usize;
    let mut progress_at = 0usize;
    let mut records = Vec::new();
    let mut macro_steps = Vec::new();
    let mut candidate = language_of(family, &p_last)?;

    for (n, &entry) in trace.entries()[..settings.budget].iter().enumerate() {
        let iter = n + 1;
        backlog.push_back(entry);
        let done_before = tau_done;

        match phase {
            Phase::LockStep => match lce.get(&p_last).verdict() {
                Some(known) => records.push(IterationRecord {
                    iter,
                    entry,
                    candidate: p_last.clone(),
                    probe: None,
                    verdict: known,
                    event: Event::Replay,
                }),
                None => {
                    let verdict = check(&candidate, target, &settings.strategy)?;
                    records.push(IterationRecord {
                        iter,
                        entry,
                        candidate: p_last.clone(),
                        probe: None,
                        verdict,
                        event: Event::Conjecture,
                    });
                    match verdict {
                        Verdict::NoCounterexample => lce.set(&p_last, Lce::NoCounterexample)?,
                        Verdict::Counterexample(_) => phase = Phase::Probing { mu: 0 },
                    }
                }
            },
            Phase::Probing { mu } => {
                let &e = universe.get(mu).ok_or_else(|| {
                    Error::InconsistentOracle(format!(
                        "{p_last} was refuted but no element of the universe is a counterexample"
                    ))
                })?;
                let verdict = check(
                    &candidate.intersect_singleton(e),
                    target,
                    &settings.strategy,
                )?;
                records.push(IterationRecord {
                    iter,
                    entry,
                    candidate: p_last.clone(),
                    probe: Some(e),
                    verdict,
                    event: Event::Probe,
                });
                match verdict {
                    Verdict::Counterexample(c) if c == e => {
                        lce.set(&p_last, Lce::Minimal(e))?;
                        phase = Phase::LockStep;
                    }
                    Verdict::Counterexample(c) => {
                        return Err(Error::InconsistentOracle(format!(
                            "probe {{{e}}} answered with {c}"
                        )))
                    }
                    Verdict::NoCounterexample => phase = Phase::Probing { mu: mu + 1 },
                }
            }
        }

        if phase == Phase::LockStep {
            let before = p_last.index.clone();
            let (reached, used) = replay_into(
                &lce,
                p_last,
                backlog.iter().copied(),
                generalizer,
                &mut macro_steps,
            )?;
            backlog.drain(..used);
            tau_done += used;
            p_last = reached;
            if p_last.index != before {
                candidate = language_of(family, &p_last)?;
            }
            if p_last.is_frozen() {
                records.push(IterationRecord {
                    iter,
                    entry,
                    candidate: p_last.clone(),
                    probe: None,
                    verdict: Verdict::NoCounterexample,
                    event: Event::Freeze,
                });
                break;
            }
        }

        if tau_done > done_before {
            progress_at = iter;
        } else if iter - progress_at > stall_limit {
            return Err(Error::InconsistentOracle(format!(
                "no replay progress in {stall_limit} micro-steps at {p_last}"
            )));
        }
    }

    Ok(EngineRun {
        variant: EngineVariant::SimulatedMinCegis,
        family: *family,
        generalizer: generalizer.clone(),
        budget: settings.budget,
        records,
        macro_steps,
        final_program: p_last,
        lce: Some(lce),
    })
}
