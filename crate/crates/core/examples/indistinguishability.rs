//! Two diagonal-family targets that differ only at <0,z2>, presented with
//! the same trace to a verifier that never names <0,z2>: the iteration logs
//! are identical, so at least one run ends on the wrong language.

use cegis_lab::cli::log::run_jsonl;
use cegis_lab::harness::{
    demo_lemma2, indistinguishability_demo, CraftedPair, Lemma2Config, PairOutcome,
};
use cegis_lab::prelude::*;

fn main() -> Result<()> {
    let diag = DiagonalFamily::default();
    let g = Generalizer::for_family(&Family::Diagonal(diag));
    let pair = CraftedPair::new(&[(0, 2)], 7, 9);
    match indistinguishability_demo(&diag, &pair, &g, 200)? {
        PairOutcome::Compared {
            left,
            right,
            logs_identical,
            differ_at_z2,
        } => {
            println!("logs identical: {logs_identical}; targets differ at <0,9>: {differ_at_z2}");
            for e in [&left, &right] {
                println!(
                    "  {} -> {} (match {})",
                    e.row.target, e.run.final_program, e.verdict.semantic_match
                );
            }
            print!(
                "{}",
                run_jsonl(&left.run)
                    .lines()
                    .take(4)
                    .collect::<Vec<_>>()
                    .join("\n")
            );
            println!("\n  ...");
        }
        PairOutcome::Skipped(why) => println!("skipped: {why}"),
    }

    let report = demo_lemma2(&Lemma2Config::default())?;
    println!("\n{}", report.conclusion);
    Ok(())
}
