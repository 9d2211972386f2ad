//! Candidate programs: a family index plus engine-owned state.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::Example;

/// Inclusive bounds `[x_lo, x_hi] x [y_lo, y_hi]` on the integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RectBounds {
    pub x_lo: i64,
    pub x_hi: i64,
    pub y_lo: i64,
    pub y_hi: i64,
}

impl RectBounds {
    pub const fn new(x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Self {
        RectBounds {
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        }
    }

    pub fn point(x: i64, y: i64) -> Self {
        RectBounds::new(x, x, y, y)
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.x_lo <= x && x <= self.x_hi && self.y_lo <= y && y <= self.y_hi
    }

    pub fn is_proper(&self) -> bool {
        self.x_lo <= self.x_hi && self.y_lo <= self.y_hi
    }

    /// Smallest box holding `self` and `(x, y)`.
    pub fn expand(&self, x: i64, y: i64) -> Self {
        RectBounds::new(
            self.x_lo.min(x),
            self.x_hi.max(x),
            self.y_lo.min(y),
            self.y_hi.max(y),
        )
    }
}

impl fmt::Display for RectBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{}]x[{},{}]",
            self.x_lo, self.x_hi, self.y_lo, self.y_hi
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GoldVariant {
    Full,
    Minus(Example),
}

/// Which language of its family a program denotes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Index {
    Chain(u64),
    Rect(RectBounds),
    Diag(u64),
    /// An explicit finite set of codes.
    Finite(Arc<BTreeSet<Example>>),
    Gold(GoldVariant),
}

impl Index {
    pub fn finite(members: impl IntoIterator<Item = Example>) -> Self {
        Index::Finite(Arc::new(members.into_iter().collect()))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Chain(i) => write!(f, "L_{i}"),
            Index::Rect(r) => write!(f, "rect{r}"),
            Index::Diag(i) => write!(f, "diag({i})"),
            Index::Finite(s) => {
                f.write_str("{")?;
                for (k, x) in s.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
            Index::Gold(GoldVariant::Full) => f.write_str("V*"),
            Index::Gold(GoldVariant::Minus(i)) => write!(f, "V*-{{{i}}}"),
        }
    }
}

/// Memory of the singleton-probe learner for the diagonal family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagMemory {
    /// Only `<0, n>` codes seen so far.
    Scanning {
        min_zero: Option<u64>,
        largest: Option<Example>,
    },
    /// Some `<1, k>` seen; recovering every member below `x_max`.
    Recovering {
        x_max: Example,
        members: Arc<BTreeSet<Example>>,
        /// Next code to probe.
        cursor: Example,
        /// Code whose singleton is the current candidate.
        probing: Option<Example>,
    },
}

/// Bounded engine state carried next to the index. Verifiers never read it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Aux {
    #[default]
    None,
    /// The generalizer will return this program unchanged forever.
    Frozen,
    /// Bounding box of the positive examples seen so far.
    Hull(Option<RectBounds>),
    Diag(DiagMemory),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Program {
    pub index: Index,
    pub aux: Aux,
}

impl Program {
    pub fn new(index: Index) -> Self {
        Program {
            index,
            aux: Aux::None,
        }
    }

    pub fn with_aux(index: Index, aux: Aux) -> Self {
        Program { index, aux }
    }

    pub fn frozen(index: Index) -> Self {
        Program::with_aux(index, Aux::Frozen)
    }

    pub fn is_frozen(&self) -> bool {
        self.aux == Aux::Frozen
    }

    /// Whether this candidate is a membership probe rather than a conjecture.
    pub fn is_probe(&self) -> bool {
        matches!(
            self.aux,
            Aux::Diag(DiagMemory::Recovering {
                probing: Some(_),
                ..
            })
        )
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_probe() {
            write!(f, "probe {}", self.index)
        } else if self.is_frozen() {
            write!(f, "{} (frozen)", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        assert_eq!(Program::new(Index::Chain(5)).to_string(), "L_5");
        assert_eq!(Program::frozen(Index::Chain(5)).to_string(), "L_5 (frozen)");
        assert_eq!(
            Program::new(Index::Rect(RectBounds::new(-1, 1, -1, 1))).to_string(),
            "rect[-1,1]x[-1,1]"
        );
        assert_eq!(Program::new(Index::finite([5, 43])).to_string(), "{5,43}");
        assert_eq!(
            Program::new(Index::Gold(GoldVariant::Minus(17))).to_string(),
            "V*-{17}"
        );
    }

    #[test]
    fn hull_expansion() {
        let h = RectBounds::point(0, 0).expand(2, -1).expand(-1, 3);
        assert_eq!(h, RectBounds::new(-1, 2, -1, 3));
        assert!(h.contains(0, 0) && !h.contains(3, 0));
    }
}
