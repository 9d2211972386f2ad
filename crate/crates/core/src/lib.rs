//! Counterexample-guided inductive synthesis over indexed families of
//! recursive languages.
//!
//! The crate provides three subset-query oracles (arbitrary, minimal and
//! history-bounded counterexamples), synthesis engines driven by a pluggable
//! generalizer, a simulation of the minimal-counterexample engine that only
//! ever asks for arbitrary counterexamples, and demonstrations comparing the
//! engines on the built-in families.
//!
//! ```
//! use cegis_lab::prelude::*;
//!
//! let family = Family::Chain(ChainFamily::new(32));
//! let target = family.language(&Index::Chain(5)).unwrap();
//! let trace = trace_generate(&target, Schedule::Canonical, 0, 100).unwrap();
//! let run = run_engine(
//!     EngineVariant::Cegis,
//!     &family,
//!     &target,
//!     &trace,
//!     &Generalizer::chain(32),
//!     &RunSettings::new(100),
//! )
//! .unwrap();
//! assert_eq!(run.final_program.index, Index::Chain(5));
//! assert_eq!(run.queries(), 7);
//! ```

pub mod cli;
pub mod engines;
pub mod error;
pub mod families;
pub mod harness;
pub mod language;
pub mod pairing;
pub mod program;
pub mod trace;
pub mod verifiers;

/// A natural number; pair-coded families read it as a tuple.
pub type Example = u64;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::engines::{
        run_engine, simulate_min_via_arbitrary, t_lce_replay, EngineRun, EngineVariant, Event,
        Generalizer, IterationRecord, Lce, LceMap, Replay, RunSettings,
    };
    pub use crate::error::{Error, Result};
    pub use crate::families::{ChainFamily, DiagonalFamily, Family, GoldFamily, RectangleFamily};
    pub use crate::harness::{convergence_verdict, Convergence, Status};
    pub use crate::language::{ElementOrder, Language};
    pub use crate::pairing::{pair_decode, pair_encode, point_decode, point_encode};
    pub use crate::program::{GoldVariant, Index, Program, RectBounds};
    pub use crate::trace::{smpl, trace_generate, Schedule, Trace, TraceEntry};
    pub use crate::verifiers::{check, hcheck, mincheck, CexStrategy, Verdict};
    pub use crate::Example;
}
