use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::language::{ElementOrder, Language, MemberSet};
use crate::pairing::{pair_decode, pair_encode};
use crate::program::Index;
use crate::Example;

/// Finite languages of `<j, n>` codes with `j ∈ {0, 1}` holding some
/// `<1, k>`, together with `diag(i) = { <0, n> | n ∈ base(i) }` where
/// `base(i) = { n | n >= i }` so that `min(base(i)) = i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagonalFamily {
    bound: Example,
}

struct DiagSet(u64);

impl MemberSet for DiagSet {
    fn contains(&self, code: Example) -> bool {
        let (j, n) = pair_decode(code);
        j == 0 && n >= self.0
    }

    fn members_upto(&self, bound: Example) -> Vec<Example> {
        (self.0..)
            .map(|n| pair_encode(0, n))
            .take_while(|c| matches!(c, Ok(c) if *c <= bound))
            .map(|c| c.expect("checked by take_while"))
            .collect()
    }
}

impl DiagonalFamily {
    pub const DEFAULT_BOUND: Example = 600;

    pub fn new(bound: Example) -> Self {
        DiagonalFamily { bound }
    }

    pub fn universe_bound(&self) -> Example {
        self.bound
    }

    /// Largest `i` whose `diag(i)` is nonempty within the bound.
    pub fn max_diag_index(&self) -> u64 {
        (0..)
            .take_while(|&n| matches!(pair_encode(0, n), Ok(c) if c <= self.bound))
            .last()
            .unwrap_or(0)
    }

    pub fn diag_language(&self, i: u64) -> Result<Language> {
        let max = self.max_diag_index();
        if i > max {
            return Err(Error::OutOfRange { index: i, max });
        }
        Ok(Language::new(
            format!("diag({i})"),
            self.bound,
            ElementOrder::Natural,
            DiagSet(i),
        ))
    }

    /// Index of the finite member with the given `(j, n)` pairs.
    pub fn fin_index(&self, pairs: &[(u64, u64)]) -> Result<Index> {
        let mut codes = BTreeSet::new();
        for &(j, n) in pairs {
            if j > 1 {
                return Err(Error::InvalidFamilyMember(format!(
                    "<{j},{n}> has first coordinate outside {{0,1}}"
                )));
            }
            let code = pair_encode(j, n)?;
            if code > self.bound {
                return Err(Error::InvalidFamilyMember(format!(
                    "<{j},{n}> = {code} exceeds the universe bound {}",
                    self.bound
                )));
            }
            codes.insert(code);
        }
        if !pairs.iter().any(|&(j, _)| j == 1) {
            return Err(Error::InvalidFamilyMember(
                "a finite member needs some <1,k> element".into(),
            ));
        }
        Ok(Index::finite(codes))
    }

    pub fn fin_language(&self, pairs: &[(u64, u64)]) -> Result<Language> {
        match self.fin_index(pairs)? {
            Index::Finite(codes) => Ok(self.finite_language(&codes)),
            _ => unreachable!("fin_index builds finite indices"),
        }
    }

    /// Any explicit finite set, member of the family or not.
    pub fn finite_language(&self, codes: &BTreeSet<Example>) -> Language {
        Language::finite(
            Index::Finite(codes.clone().into()).to_string(),
            self.bound,
            ElementOrder::Natural,
            codes.clone(),
        )
    }

    pub fn template(&self, index: &Index, code: Example) -> Option<bool> {
        match index {
            Index::Diag(i) => Some(DiagSet(*i).contains(code)),
            Index::Finite(s) => Some(s.contains(&code)),
            _ => None,
        }
    }

    /// Whether `index` names a member of `fin ∪ diag`.
    pub fn is_member(&self, index: &Index) -> bool {
        match index {
            Index::Diag(i) => *i <= self.max_diag_index(),
            Index::Finite(s) => {
                !s.is_empty()
                    && s.iter().all(|&c| c <= self.bound && pair_decode(c).0 <= 1)
                    && s.iter().any(|&c| pair_decode(c).0 == 1)
            }
            _ => false,
        }
    }
}

impl Default for DiagonalFamily {
    fn default() -> Self {
        DiagonalFamily::new(Self::DEFAULT_BOUND)
    }
}
