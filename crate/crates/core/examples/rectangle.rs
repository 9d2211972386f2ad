//! Carving the unit square out of the whole grid with minimal
//! counterexamples under the radial order.

use cegis_lab::harness::demo_rectangle;
use cegis_lab::prelude::*;

fn main() -> Result<()> {
    let family = Family::Rectangle(RectangleFamily::default());
    let target = family.language(&Index::Rect(RectBounds::new(-1, 1, -1, 1)))?;
    let trace = trace_generate(&target, Schedule::Canonical, 0, 40)?;
    let g = Generalizer::for_family(&family);
    let run = run_engine(
        EngineVariant::MinCegis,
        &family,
        &target,
        &trace,
        &g,
        &RunSettings::new(40),
    )?;
    for r in run.records.iter().filter(|r| r.verdict.is_refutation()) {
        let e = r.verdict.cex().unwrap();
        println!(
            "{:>3}: {} refuted by {:?}",
            r.iter,
            r.candidate,
            point_decode(e)
        );
    }
    println!("final {}", run.final_program);

    let report = demo_rectangle(None)?;
    print!("\n{}", report.to_markdown());
    Ok(())
}
