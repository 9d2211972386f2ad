//! Finite-run proxy for identification in the limit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engines::{EngineRun, Event};
use crate::error::Result;
use crate::families::Family;
use crate::language::Language;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Conjecture settled at this iteration.
    Converged(usize),
    /// Never refuted, never right, and no longer moving.
    Stalled,
    BudgetExhausted,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Converged(_) => "converged",
            Status::Stalled => "stalled",
            Status::BudgetExhausted => "budget-exhausted",
        }
    }

    pub fn converged_at(self) -> Option<usize> {
        match self {
            Status::Converged(k) => Some(k),
            _ => None,
        }
    }

    /// Same kind of outcome, ignoring the iteration.
    pub fn same_kind(self, other: Status) -> bool {
        self.name() == other.name()
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Converged(k) => write!(f, "converged@{k}"),
            other => f.write_str(other.name()),
        }
    }
}

/// Observable outcome of a run plus the harness-only ground truth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Convergence {
    pub status: Status,
    /// Final program agrees with the target on `[0, B]`.
    pub semantic_match: bool,
}

/// `2 · min(member count, 50)`.
pub fn default_window(family: &Family) -> usize {
    2 * family.member_count_hint().min(50) as usize
}

/// `10 · B`.
pub fn default_budget(family: &Family) -> usize {
    10 * family.universe_bound() as usize
}

/// Classifies a finished run.
///
/// A settled generalizer converges where it settled. Otherwise the run
/// converges if its last `window` conjectures share one language and the
/// final verdict is ⊥, and stalls if additionally it never saw a
/// counterexample and the language is wrong. Probe steps never count
/// toward the window.
pub fn convergence_verdict(
    run: &EngineRun,
    target: &Language,
    window: usize,
) -> Result<Convergence> {
    let semantic_match = run
        .family
        .program_language(&run.final_program)?
        .same_within_bound(target);
    let status = classify(run, semantic_match, window.max(1));
    Ok(Convergence {
        status,
        semantic_match,
    })
}

fn classify(run: &EngineRun, semantic_match: bool, window: usize) -> Status {
    let Some(last) = run.records.last() else {
        return Status::BudgetExhausted;
    };
    if last.event == Event::Freeze {
        return Status::Converged(last.iter);
    }
    let mut settled_at = None;
    let mut segment = 0;
    for r in run.records.iter().rev() {
        if r.event == Event::Probe || r.candidate.index != last.candidate.index {
            break;
        }
        segment += 1;
        settled_at = Some(r.iter);
    }
    if segment < window {
        return Status::BudgetExhausted;
    }
    if run.counterexamples() == 0 && !semantic_match {
        Status::Stalled
    } else if !last.verdict.is_refutation() {
        Status::Converged(settled_at.expect("segment is nonempty"))
    } else {
        Status::BudgetExhausted
    }
}
