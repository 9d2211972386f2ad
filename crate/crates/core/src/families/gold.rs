use crate::error::{Error, Result};
use crate::language::{ElementOrder, Language};
use crate::program::GoldVariant;
use crate::Example;

/// `V*` modeled as `[0, B]`, plus `V* - {i}` for every `i <= B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldFamily {
    bound: Example,
}

impl GoldFamily {
    pub const DEFAULT_BOUND: Example = 40;

    pub fn new(bound: Example) -> Self {
        GoldFamily { bound }
    }

    pub fn universe_bound(&self) -> Example {
        self.bound
    }

    pub fn template(&self, variant: GoldVariant, n: Example) -> bool {
        match variant {
            GoldVariant::Full => n <= self.bound,
            GoldVariant::Minus(i) => n <= self.bound && n != i,
        }
    }

    pub fn gold_language(&self, variant: GoldVariant) -> Result<Language> {
        if let GoldVariant::Minus(i) = variant {
            if i > self.bound {
                return Err(Error::OutOfRange {
                    index: i,
                    max: self.bound,
                });
            }
        }
        let descriptor = match variant {
            GoldVariant::Full => "V*".to_string(),
            GoldVariant::Minus(i) => format!("V*-{{{i}}}"),
        };
        let this = *self;
        Ok(Language::from_predicate(
            descriptor,
            self.bound,
            ElementOrder::Natural,
            move |n| this.template(variant, n),
        ))
    }
}

impl Default for GoldFamily {
    fn default() -> Self {
        GoldFamily::new(Self::DEFAULT_BOUND)
    }
}
