use crate::error::{Error, Result};
use crate::language::{ElementOrder, Language, MemberSet};
use crate::Example;

/// `L_i = { n | n <= i }` for `i <= max_index`; a strict chain under inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainFamily {
    max_index: u64,
}

struct Initial(u64);

impl MemberSet for Initial {
    fn contains(&self, x: Example) -> bool {
        x <= self.0
    }

    fn members_upto(&self, bound: Example) -> Vec<Example> {
        (0..=self.0.min(bound)).collect()
    }
}

impl ChainFamily {
    pub const DEFAULT_MAX_INDEX: u64 = 32;

    pub fn new(max_index: u64) -> Self {
        ChainFamily { max_index }
    }

    pub fn max_index(&self) -> u64 {
        self.max_index
    }

    pub fn universe_bound(&self) -> Example {
        self.max_index + 2
    }

    pub fn template(&self, i: u64, n: Example) -> bool {
        n <= i
    }

    pub fn chain_language(&self, i: u64) -> Result<Language> {
        if i > self.max_index {
            return Err(Error::OutOfRange {
                index: i,
                max: self.max_index,
            });
        }
        Ok(Language::new(
            format!("L_{i}"),
            self.universe_bound(),
            ElementOrder::Natural,
            Initial(i),
        ))
    }
}

impl Default for ChainFamily {
    fn default() -> Self {
        ChainFamily::new(Self::DEFAULT_MAX_INDEX)
    }
}
