//! Arbitrary counterexamples identify every chain member; counterexamples
//! bounded by the history never appear, so the history-bounded engine
//! climbs past the target and stays there.

use cegis_lab::harness::{default_budget, default_window, demo_lemma1};
use cegis_lab::prelude::*;

fn main() -> Result<()> {
    let family = Family::Chain(ChainFamily::default());
    let target = family.language(&Index::Chain(5))?;
    let budget = default_budget(&family);
    let trace = trace_generate(&target, Schedule::Canonical, 0, budget)?;
    let g = Generalizer::for_family(&family);
    for variant in [EngineVariant::Cegis, EngineVariant::HCegis] {
        let run = run_engine(
            variant,
            &family,
            &target,
            &trace,
            &g,
            &RunSettings::new(budget),
        )?;
        let verdict = convergence_verdict(&run, &target, default_window(&family))?;
        println!(
            "{variant:>7}: final {}, {} queries, {} counterexamples, {}",
            run.final_program,
            run.queries(),
            run.counterexamples(),
            verdict.status
        );
    }

    let report = demo_lemma1(20, None)?;
    println!("\n{}", report.conclusion);
    Ok(())
}
