//! Built-in indexed families.

mod chain;
mod diagonal;
mod gold;
mod rectangle;

pub use chain::ChainFamily;
pub use diagonal::DiagonalFamily;
pub use gold::GoldFamily;
pub use rectangle::RectangleFamily;

use crate::error::{Error, Result};
use crate::language::{ElementOrder, Language};
use crate::pairing::{pair_decode, point_decode};
use crate::program::{Index, Program};
use crate::Example;

/// One of the built-in families, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Chain(ChainFamily),
    Rectangle(RectangleFamily),
    Diagonal(DiagonalFamily),
    Gold(GoldFamily),
}

impl Family {
    pub const NAMES: [&'static str; 4] = ["chain", "rectangle", "diagonal", "gold"];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Chain(_) => "chain",
            Family::Rectangle(_) => "rectangle",
            Family::Diagonal(_) => "diagonal",
            Family::Gold(_) => "gold",
        }
    }

    pub fn universe_bound(&self) -> Example {
        match self {
            Family::Chain(f) => f.universe_bound(),
            Family::Rectangle(f) => f.universe_bound(),
            Family::Diagonal(f) => f.universe_bound(),
            Family::Gold(f) => f.universe_bound(),
        }
    }

    pub fn order(&self) -> ElementOrder {
        match self {
            Family::Rectangle(_) => ElementOrder::Radial,
            _ => ElementOrder::Natural,
        }
    }

    /// `TEMPLATE(index, n)`.
    pub fn template(&self, index: &Index, n: Example) -> Result<bool> {
        let answer = match (self, index) {
            (_, Index::Finite(s)) => Some(s.contains(&n)),
            (Family::Chain(f), Index::Chain(i)) => Some(f.template(*i, n)),
            (Family::Rectangle(f), Index::Rect(b)) => Some(f.template(b, n)),
            (Family::Diagonal(f), idx) => f.template(idx, n),
            (Family::Gold(f), Index::Gold(v)) => Some(f.template(*v, n)),
            _ => None,
        };
        answer.ok_or_else(|| self.foreign(index))
    }

    /// The language an index denotes. Explicit finite sets are accepted in
    /// every family since probes and replays query them.
    pub fn language(&self, index: &Index) -> Result<Language> {
        match (self, index) {
            (_, Index::Finite(s)) => Ok(Language::finite(
                index.to_string(),
                self.universe_bound(),
                self.order(),
                (**s).clone(),
            )),
            (Family::Chain(f), Index::Chain(i)) => f.chain_language(*i),
            (Family::Rectangle(f), Index::Rect(b)) => f.rectangle_language(*b),
            (Family::Diagonal(f), Index::Diag(i)) => f.diag_language(*i),
            (Family::Gold(f), Index::Gold(v)) => f.gold_language(*v),
            _ => Err(self.foreign(index)),
        }
    }

    pub fn program_language(&self, program: &Program) -> Result<Language> {
        self.language(&program.index)
    }

    /// Whether `index` names a member of the family proper, as opposed to
    /// an auxiliary finite set.
    pub fn is_member(&self, index: &Index) -> bool {
        match (self, index) {
            (Family::Diagonal(f), idx) => f.is_member(idx),
            (_, Index::Finite(_)) => false,
            _ => self.language(index).is_ok(),
        }
    }

    /// Semantic equality on `[0, B]`.
    pub fn equivalent(&self, a: &Index, b: &Index) -> Result<bool> {
        Ok(self.language(a)?.same_within_bound(&self.language(b)?))
    }

    /// Number of members, capped; sizes the default stability window.
    pub fn member_count_hint(&self) -> u64 {
        match self {
            Family::Chain(f) => f.max_index() + 1,
            Family::Gold(f) => f.universe_bound() + 2,
            Family::Rectangle(_) | Family::Diagonal(_) => 100,
        }
    }

    /// Human-readable tuple for pair-coded families.
    pub fn decode(&self, code: Example) -> Option<(i64, i64)> {
        match self {
            Family::Rectangle(_) => Some(point_decode(code)),
            Family::Diagonal(_) => {
                let (j, n) = pair_decode(code);
                Some((j as i64, n as i64))
            }
            _ => None,
        }
    }

    pub fn describe_example(&self, code: Example) -> String {
        match self.decode(code) {
            Some((a, b)) => format!("{code}=({a},{b})"),
            None => code.to_string(),
        }
    }

    fn foreign(&self, index: &Index) -> Error {
        Error::EngineFault(format!(
            "{index} is not an index of the {} family",
            self.name()
        ))
    }
}
