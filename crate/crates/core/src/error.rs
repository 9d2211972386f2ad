use thiserror::Error;

use crate::Example;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pair ({0}, {1}) does not fit in a 64-bit code")]
    InputTooLarge(u64, u64),

    #[error("cannot enumerate the empty language {0} canonically")]
    EmptyLanguage(String),

    #[error("index {index} is outside the family range 0..={max}")]
    OutOfRange { index: u64, max: u64 },

    #[error("invalid rectangle: {0}")]
    InvalidRectangle(String),

    #[error("invalid family member: {0}")]
    InvalidFamilyMember(String),

    #[error("universe bounds differ: candidate {candidate}, target {target}")]
    BoundMismatch { candidate: Example, target: Example },

    #[error("every counterexample of {candidate} lies in the avoid set")]
    StrategyInfeasible { candidate: String },

    #[error("engine fault: {0}")]
    EngineFault(String),

    #[error("inconsistent oracle: {0}")]
    InconsistentOracle(String),

    #[error("probe overflow: {needed} probes requested, cap is {cap}")]
    ProbeOverflow { needed: u64, cap: u64 },

    #[error("trace holds {len} entries but the budget needs {budget}")]
    TraceTooShort { len: usize, budget: usize },

    #[error("config: {0}")]
    Config(String),
}
