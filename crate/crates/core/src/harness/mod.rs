//! Convergence classification, demo reports and the shipped demos.

mod convergence;
pub mod demos;
mod report;

pub use convergence::{convergence_verdict, default_budget, default_window, Convergence, Status};
pub use demos::{
    demo_gold, demo_lemma1, demo_lemma2, demo_rectangle, demo_theorem1, indistinguishability_demo,
    CraftedPair, Lemma2Config, PairOutcome, Theorem1Config,
};
pub use report::{Check, PairRow, RunRow, SeparationReport};
