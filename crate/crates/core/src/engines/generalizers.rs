//! Concrete inductive generalizers, one per family.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::pairing::{pair_decode, pair_encode, point_decode};
use crate::program::{Aux, DiagMemory, GoldVariant, Index, Program, RectBounds};
use crate::trace::TraceEntry;
use crate::verifiers::Verdict;
use crate::Example;

/// The function `F` of the synthesis recursion together with its initial
/// guess. `step` reads nothing but its three arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generalizer {
    /// Enumerates `L_0, L_1, ...` until refuted, then settles on the
    /// previous guess.
    Chain { cap: u64 },
    /// Starts from the whole grid and cuts one side per counterexample,
    /// never cutting through the hull of the positive examples.
    Rectangle { grid: i64 },
    /// Minimum-index rule on the diagonal sub-family; singleton probes to
    /// recover a finite member once a `<1, k>` example shows up.
    Diag { probe_cap: Example },
    /// Guesses everything, then everything but the counterexample.
    Gold,
}

#[derive(Clone, Copy)]
enum Axis {
    X,
    Y,
}

impl Generalizer {
    pub const NAMES: [&'static str; 4] = ["chain", "rectangle", "diag", "gold"];

    pub fn chain(cap: u64) -> Self {
        Generalizer::Chain { cap }
    }

    pub fn rectangle(grid: i64) -> Self {
        Generalizer::Rectangle { grid }
    }

    pub fn diag(probe_cap: Example) -> Self {
        Generalizer::Diag { probe_cap }
    }

    pub fn gold() -> Self {
        Generalizer::Gold
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generalizer::Chain { .. } => "chain",
            Generalizer::Rectangle { .. } => "rectangle",
            Generalizer::Diag { .. } => "diag",
            Generalizer::Gold => "gold",
        }
    }

    /// The generalizer built for `family`.
    pub fn for_family(family: &Family) -> Self {
        match family {
            Family::Chain(f) => Generalizer::chain(f.max_index()),
            Family::Rectangle(f) => Generalizer::rectangle(f.grid()),
            Family::Diagonal(f) => Generalizer::diag(f.universe_bound()),
            Family::Gold(_) => Generalizer::gold(),
        }
    }

    /// Looks a generalizer up by name; it must fit the family.
    pub fn from_name(name: &str, family: &Family) -> Result<Self> {
        let g = Self::for_family(family);
        if g.name() == name {
            Ok(g)
        } else if Self::NAMES.contains(&name) {
            Err(Error::Config(format!(
                "generalizer {name:?} does not apply to the {} family",
                family.name()
            )))
        } else {
            Err(Error::Config(format!(
                "unknown generalizer {name:?}; expected one of {}",
                Self::NAMES.join(", ")
            )))
        }
    }

    /// `P_0`.
    pub fn initial(&self) -> Program {
        match self {
            Generalizer::Chain { .. } => Program::new(Index::Chain(0)),
            Generalizer::Rectangle { grid } => Program::with_aux(
                Index::Rect(RectBounds::new(-grid, *grid, -grid, *grid)),
                Aux::Hull(None),
            ),
            Generalizer::Diag { .. } => Program::with_aux(
                Index::Diag(0),
                Aux::Diag(DiagMemory::Scanning {
                    min_zero: None,
                    largest: None,
                }),
            ),
            Generalizer::Gold => Program::new(Index::Gold(GoldVariant::Full)),
        }
    }

    /// `F(previous, entry, verdict)`.
    pub fn step(&self, prev: &Program, entry: TraceEntry, verdict: Verdict) -> Result<Program> {
        match self {
            Generalizer::Chain { cap } => chain_step(*cap, prev, verdict),
            Generalizer::Rectangle { .. } => rectangle_step(prev, entry, verdict),
            Generalizer::Diag { probe_cap } => diag_step(*probe_cap, prev, entry, verdict),
            Generalizer::Gold => gold_step(prev, verdict),
        }
    }
}

fn foreign(g: &str, prev: &Program) -> Error {
    Error::EngineFault(format!("{g} generalizer cannot continue from {prev}"))
}

fn chain_step(cap: u64, prev: &Program, verdict: Verdict) -> Result<Program> {
    let Index::Chain(i) = prev.index else {
        return Err(foreign("chain", prev));
    };
    if prev.is_frozen() {
        return Ok(prev.clone());
    }
    match verdict {
        Verdict::NoCounterexample => Ok(Program::new(Index::Chain((i + 1).min(cap)))),
        Verdict::Counterexample(e) if i == 0 => Err(Error::InconsistentOracle(format!(
            "L_0 refuted by {e}, but every target contains 0"
        ))),
        Verdict::Counterexample(_) => Ok(Program::frozen(Index::Chain(i - 1))),
    }
}

fn gold_step(prev: &Program, verdict: Verdict) -> Result<Program> {
    let Index::Gold(variant) = prev.index else {
        return Err(foreign("gold", prev));
    };
    match (variant, verdict) {
        (_, Verdict::NoCounterexample) => Ok(prev.clone()),
        (GoldVariant::Full, Verdict::Counterexample(x)) if !prev.is_frozen() => {
            Ok(Program::frozen(Index::Gold(GoldVariant::Minus(x))))
        }
        (_, Verdict::Counterexample(x)) => Err(Error::InconsistentOracle(format!(
            "{} refuted by {x} after settling",
            prev.index
        ))),
    }
}

fn rectangle_step(prev: &Program, entry: TraceEntry, verdict: Verdict) -> Result<Program> {
    let (mut bounds, mut hull) = match (&prev.index, &prev.aux) {
        (Index::Rect(b), Aux::Hull(h)) => (*b, *h),
        _ => return Err(foreign("rectangle", prev)),
    };
    if let Some(code) = entry.value() {
        let (x, y) = point_decode(code);
        hull = Some(hull.map_or(RectBounds::point(x, y), |h| h.expand(x, y)));
        // A positive example outside the guess undoes an earlier cut.
        bounds = bounds.expand(x, y);
    }
    if let Some(code) = verdict.cex() {
        let (x, y) = point_decode(code);
        let axes = if x.abs() >= y.abs() {
            [Axis::X, Axis::Y]
        } else {
            [Axis::Y, Axis::X]
        };
        let cut = axes.into_iter().find_map(|axis| {
            let (coord, lo, hi, span) = match axis {
                Axis::X => (x, bounds.x_lo, bounds.x_hi, hull.map(|h| (h.x_lo, h.x_hi))),
                Axis::Y => (y, bounds.y_lo, bounds.y_hi, hull.map(|h| (h.y_lo, h.y_hi))),
            };
            shrink(coord, lo, hi, span).map(|range| (axis, range))
        });
        match cut {
            Some((Axis::X, (lo, hi))) => (bounds.x_lo, bounds.x_hi) = (lo, hi),
            Some((Axis::Y, (lo, hi))) => (bounds.y_lo, bounds.y_hi) = (lo, hi),
            None => {
                return Err(Error::InconsistentOracle(format!(
                    "counterexample ({x},{y}) cannot be cut away from {bounds}"
                )))
            }
        }
    }
    Ok(Program::with_aux(Index::Rect(bounds), Aux::Hull(hull)))
}

/// New `[lo, hi]` excluding `coord` while keeping `span`, if possible.
fn shrink(coord: i64, lo: i64, hi: i64, span: Option<(i64, i64)>) -> Option<(i64, i64)> {
    match span {
        Some((_, max)) if coord > max => Some((lo, coord - 1)),
        Some((min, _)) if coord < min => Some((coord + 1, hi)),
        Some(_) => None,
        // No positive example yet: cut toward the origin, or keep the
        // larger side when the coordinate is zero.
        None => {
            let below = (coord > lo).then_some((lo, coord - 1));
            let above = (coord < hi).then_some((coord + 1, hi));
            if coord > 0 || (coord == 0 && coord - lo > hi - coord) {
                below.or(above)
            } else {
                above.or(below)
            }
        }
    }
}

fn diag_step(
    probe_cap: Example,
    prev: &Program,
    entry: TraceEntry,
    verdict: Verdict,
) -> Result<Program> {
    let Aux::Diag(memory) = &prev.aux else {
        return Err(foreign("diag", prev));
    };
    match memory {
        DiagMemory::Scanning { min_zero, largest } => {
            let (mut min_zero, mut largest) = (*min_zero, *largest);
            if let Some(code) = entry.value() {
                largest = Some(largest.map_or(code, |l| l.max(code)));
                match pair_decode(code) {
                    (1, _) => {
                        let x_max = largest.expect("just set");
                        let mut members = BTreeSet::from([code, x_max]);
                        if let Some(j) = min_zero {
                            members.insert(pair_encode(0, j)?);
                        }
                        return recover(probe_cap, x_max, members, 0);
                    }
                    (0, n) => min_zero = Some(min_zero.map_or(n, |m| m.min(n))),
                    _ => {}
                }
            }
            Ok(Program::with_aux(
                Index::Diag(min_zero.unwrap_or(0)),
                Aux::Diag(DiagMemory::Scanning { min_zero, largest }),
            ))
        }
        DiagMemory::Recovering {
            x_max,
            members,
            cursor,
            probing,
        } => {
            let mut members = (**members).clone();
            match (probing, verdict) {
                (Some(x), Verdict::NoCounterexample) => {
                    members.insert(*x);
                }
                (Some(x), Verdict::Counterexample(e)) if e == *x => {}
                (_, Verdict::Counterexample(e)) => {
                    return Err(Error::InconsistentOracle(format!(
                        "{} refuted by {e}",
                        prev.index
                    )))
                }
                (None, Verdict::NoCounterexample) => {}
            }
            let mut x_max = *x_max;
            if let Some(code) = entry.value() {
                members.insert(code);
                x_max = x_max.max(code);
            }
            recover(probe_cap, x_max, members, *cursor)
        }
    }
}

/// Probes the next undecided code below `x_max`, or conjectures the
/// recovered set when none is left.
fn recover(
    probe_cap: Example,
    x_max: Example,
    members: BTreeSet<Example>,
    cursor: Example,
) -> Result<Program> {
    if x_max > probe_cap {
        return Err(Error::ProbeOverflow {
            needed: x_max,
            cap: probe_cap,
        });
    }
    let members = Arc::new(members);
    match (cursor..x_max).find(|x| !members.contains(x)) {
        Some(x) => Ok(Program::with_aux(
            Index::finite([x]),
            Aux::Diag(DiagMemory::Recovering {
                x_max,
                members,
                cursor: x + 1,
                probing: Some(x),
            }),
        )),
        None => Ok(Program::with_aux(
            Index::Finite(members.clone()),
            Aux::Diag(DiagMemory::Recovering {
                x_max,
                members,
                cursor: x_max,
                probing: None,
            }),
        )),
    }
}
