//! The history-bounded engine identifies finite and diagonal members of the
//! diagonal family by probing singletons below the largest example seen.

use cegis_lab::prelude::*;

fn main() -> Result<()> {
    let diag = DiagonalFamily::default();
    let family = Family::Diagonal(diag);
    let targets = [diag.fin_index(&[(0, 2), (0, 5), (1, 7)])?, Index::Diag(3)];
    for target in targets {
        let language = family.language(&target)?;
        let trace = trace_generate(&language, Schedule::PaddedSeeded, 5, 1500)?;
        let g = Generalizer::for_family(&family);
        let run = run_engine(
            EngineVariant::HCegis,
            &family,
            &language,
            &trace,
            &g,
            &RunSettings::new(1500),
        )?;
        let verdict = convergence_verdict(&run, &language, 200)?;
        println!(
            "{target}: final {} ({}, match {}), {} probes",
            run.final_program,
            verdict.status,
            verdict.semantic_match,
            run.records
                .iter()
                .filter(|r| r.event == Event::Probe)
                .count()
        );
    }
    Ok(())
}
