//! Minimal-counterexample synthesis rebuilt from an arbitrary-counterexample
//! verifier: both runs end on the same program.

use cegis_lab::harness::{demo_theorem1, Theorem1Config};
use cegis_lab::prelude::*;

fn main() -> Result<()> {
    let family = Family::Chain(ChainFamily::default());
    let target = family.language(&Index::Chain(6))?;
    let trace = trace_generate(&target, Schedule::PaddedSeeded, 3, 200)?;
    let g = Generalizer::for_family(&family);
    let direct = run_engine(
        EngineVariant::MinCegis,
        &family,
        &target,
        &trace,
        &g,
        &RunSettings::new(200),
    )?;
    let settings = RunSettings::new(200).with_strategy(CexStrategy::SeededRandom(3));
    let sim = simulate_min_via_arbitrary(&family, &target, &trace, &g, &settings)?;

    println!(
        "direct:    {} after {} queries",
        direct.final_program,
        direct.queries()
    );
    println!(
        "simulated: {} after {} queries",
        sim.final_program,
        sim.queries()
    );
    for (index, lce) in sim.lce.as_ref().unwrap().iter() {
        println!("  minimal counterexample of {index}: {lce}");
    }

    let small = Theorem1Config {
        chain_targets: (0..=5).collect(),
        rect_targets: vec![RectBounds::new(-1, 1, -1, 1)],
        seeds: vec![1],
        ..Theorem1Config::default()
    };
    println!("\n{}", demo_theorem1(&small)?.conclusion);
    Ok(())
}
