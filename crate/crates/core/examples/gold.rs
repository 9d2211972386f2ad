//! V* against V* - {i}: one counterexample settles the question, while a
//! learner without a counterexample channel never leaves V*.

use cegis_lab::harness::demo_gold;
use cegis_lab::prelude::*;

fn main() -> Result<()> {
    let family = Family::Gold(GoldFamily::default());
    let target = family.language(&Index::Gold(GoldVariant::Minus(17)))?;
    let trace = trace_generate(&target, Schedule::Canonical, 0, 80)?;
    let g = Generalizer::for_family(&family);
    for variant in [EngineVariant::Cegis, EngineVariant::PositiveOnly] {
        let run = run_engine(variant, &family, &target, &trace, &g, &RunSettings::new(80))?;
        let guesses: Vec<String> = run
            .conjectures()
            .iter()
            .map(|p| p.index.to_string())
            .collect();
        println!(
            "{variant}: conjectures {guesses:?}, final {}",
            run.final_program
        );
    }
    print!("\n{}", demo_gold(None)?.to_markdown());
    Ok(())
}
