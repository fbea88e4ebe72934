//! Runs a verification suite and prints its summary.

use edge_ideals::suite::{self, Settings, SuiteKind};

fn main() -> edge_ideals::Result<()> {
    let kind = SuiteKind::parse(&std::env::args().nth(1).unwrap_or_else(|| "joins".into()))?;
    let report = suite::run_suite(kind, &Settings::default());
    for r in report.results.iter().filter(|r| !r.pass) {
        println!("{} on {}: {:?}", r.claim, r.instance, r.status);
    }
    println!("{}", serde_json::to_string(&report.summary).unwrap());
    Ok(())
}
