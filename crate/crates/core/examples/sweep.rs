//! Exhaustive checks over all labeled graphs on at most five vertices.

use edge_ideals::suite::{self, Settings, SweepCheck};
use edge_ideals::FieldTag;

fn main() -> edge_ideals::Result<()> {
    let report = suite::sweep_small_graphs(5, &SweepCheck::ALL, &Settings::with_field(FieldTag::F2))?;
    println!("{} graphs", report.graphs);
    for t in &report.checks {
        println!("{:?}: {} passed, {} failed, {} skipped", t.check, t.passed, t.failed, t.skipped);
    }
    Ok(())
}
