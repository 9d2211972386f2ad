//! Decidable languages over the naturals.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::pairing::point_decode;
use crate::Example;

/// Order used to pick minimal counterexamples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementOrder {
    /// The usual order on naturals.
    Natural,
    /// Codes are read as lattice points `(x, y)` and compared by
    /// `x^2 + y^2`; ties go to the lexicographically smaller `(x, y)`.
    Radial,
}

impl ElementOrder {
    pub fn cmp(&self, a: Example, b: Example) -> Ordering {
        match self {
            ElementOrder::Natural => a.cmp(&b),
            ElementOrder::Radial => radial_key(a).cmp(&radial_key(b)),
        }
    }

    /// The elements of `[0, bound]`, sorted by this order.
    pub fn sorted_universe(&self, bound: Example) -> Vec<Example> {
        let mut all: Vec<Example> = (0..=bound).collect();
        if *self == ElementOrder::Radial {
            all.sort_by_cached_key(|&c| radial_key(c));
        }
        all
    }

    /// Minimum of `items` under this order.
    pub fn min_of(&self, items: impl IntoIterator<Item = Example>) -> Option<Example> {
        items.into_iter().min_by(|&a, &b| self.cmp(a, b))
    }
}

/// `(x^2 + y^2, x, y)` for the point coded by `code`.
pub fn radial_key(code: Example) -> (i128, i64, i64) {
    let (x, y) = point_decode(code);
    let (x2, y2) = (x as i128 * x as i128, y as i128 * y as i128);
    (x2 + y2, x, y)
}

/// Membership predicate backing a [`Language`].
pub trait MemberSet: Send + Sync {
    fn contains(&self, x: Example) -> bool;

    /// Members in `[0, bound]`, ascending.
    fn members_upto(&self, bound: Example) -> Vec<Example> {
        (0..=bound).filter(|&x| self.contains(x)).collect()
    }
}

struct Predicate<F>(F);

impl<F> MemberSet for Predicate<F>
where
    F: Fn(Example) -> bool + Send + Sync,
{
    fn contains(&self, x: Example) -> bool {
        (self.0)(x)
    }
}

struct Finite(BTreeSet<Example>);

impl MemberSet for Finite {
    fn contains(&self, x: Example) -> bool {
        self.0.contains(&x)
    }

    fn members_upto(&self, bound: Example) -> Vec<Example> {
        self.0.range(..=bound).copied().collect()
    }
}

/// A decidable set of naturals together with the witness bound of its
/// family, an element order, and a printable identity.
#[derive(Clone)]
pub struct Language {
    set: Arc<dyn MemberSet>,
    bound: Example,
    order: ElementOrder,
    descriptor: Arc<str>,
}

impl Language {
    pub fn new(
        descriptor: impl Into<String>,
        bound: Example,
        order: ElementOrder,
        set: impl MemberSet + 'static,
    ) -> Self {
        Language {
            set: Arc::new(set),
            bound,
            order,
            descriptor: descriptor.into().into(),
        }
    }

    pub fn from_predicate<F>(
        descriptor: impl Into<String>,
        bound: Example,
        order: ElementOrder,
        membership: F,
    ) -> Self
    where
        F: Fn(Example) -> bool + Send + Sync + 'static,
    {
        Self::new(descriptor, bound, order, Predicate(membership))
    }

    pub fn finite(
        descriptor: impl Into<String>,
        bound: Example,
        order: ElementOrder,
        members: BTreeSet<Example>,
    ) -> Self {
        Self::new(descriptor, bound, order, Finite(members))
    }

    pub fn contains(&self, x: Example) -> bool {
        self.set.contains(x)
    }

    /// Members within the universe bound, ascending.
    pub fn members(&self) -> Vec<Example> {
        self.set.members_upto(self.bound)
    }

    pub fn universe_bound(&self) -> Example {
        self.bound
    }

    pub fn order(&self) -> ElementOrder {
        self.order
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    /// `{k} ∩ self`.
    pub fn intersect_singleton(&self, k: Example) -> Language {
        let members = if self.contains(k) {
            BTreeSet::from([k])
        } else {
            BTreeSet::new()
        };
        Language::finite(
            format!("{} ∩ {{{k}}}", self.descriptor),
            self.bound,
            self.order,
            members,
        )
    }

    /// Same language with another printable identity.
    pub fn renamed(mut self, descriptor: impl Into<String>) -> Language {
        self.descriptor = descriptor.into().into();
        self
    }

    /// Whether `self ∩ [0, B] ⊆ other`.
    pub fn is_subset_within_bound(&self, other: &Language) -> bool {
        self.members().into_iter().all(|x| other.contains(x))
    }

    /// Whether both languages agree on every element of `[0, B]`.
    pub fn same_within_bound(&self, other: &Language) -> bool {
        let bound = self.bound.max(other.bound);
        (0..=bound).all(|x| self.contains(x) == other.contains(x))
    }
}

impl fmt::Debug for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Language")
            .field("descriptor", &&*self.descriptor)
            .field("bound", &self.bound)
            .field("order", &self.order)
            .finish()
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::point_encode;

    fn evens(bound: Example) -> Language {
        Language::from_predicate("evens", bound, ElementOrder::Natural, |x| x % 2 == 0)
    }

    #[test]
    fn singleton_intersection() {
        let l = evens(20);
        assert_eq!(l.intersect_singleton(4).members(), vec![4]);
        assert!(l.intersect_singleton(5).members().is_empty());
        for k in 0..=20 {
            let probe = l.intersect_singleton(k);
            for x in 0..=20 {
                assert_eq!(probe.contains(x), x == k && l.contains(k));
            }
        }
    }

    #[test]
    fn finite_members_respect_bound() {
        let l = Language::finite("f", 10, ElementOrder::Natural, BTreeSet::from([1, 7, 12]));
        assert_eq!(l.members(), vec![1, 7]);
        assert!(l.contains(12));
    }

    #[test]
    fn subset_and_equality() {
        let small = Language::finite("s", 10, ElementOrder::Natural, BTreeSet::from([2, 4]));
        assert!(small.is_subset_within_bound(&evens(10)));
        assert!(!evens(10).is_subset_within_bound(&small));
        let evens_again = Language::finite(
            "e",
            10,
            ElementOrder::Natural,
            (0..=10).filter(|x| x % 2 == 0).collect(),
        );
        assert!(evens(10).same_within_bound(&evens_again));
    }

    #[test]
    fn radial_order_tie_break() {
        let o = ElementOrder::Radial;
        let p = |x, y| point_encode(x, y).unwrap();
        assert_eq!(o.cmp(p(0, 0), p(1, 0)), Ordering::Less);
        assert_eq!(o.cmp(p(-2, 0), p(0, 2)), Ordering::Less);
        assert_eq!(o.cmp(p(0, -2), p(0, 2)), Ordering::Less);
        let ring = [p(0, 2), p(0, -2), p(2, 0), p(-2, 0)];
        assert_eq!(o.min_of(ring), Some(p(-2, 0)));
    }

    #[test]
    fn sorted_universe_is_a_permutation() {
        let sorted = ElementOrder::Radial.sorted_universe(200);
        let mut check = sorted.clone();
        check.sort();
        assert_eq!(check, (0..=200).collect::<Vec<_>>());
        assert!(sorted
            .windows(2)
            .all(|w| ElementOrder::Radial.cmp(w[0], w[1]) == Ordering::Less));
        assert_eq!(sorted[0], 0);
    }
}
