//! Multiplicity and depth of joins of graphs.

use edge_ideals::graph;
use edge_ideals::suite::{self, Settings};

fn main() -> edge_ideals::Result<()> {
    let pool = suite::join_pool();
    for (gn, g) in &pool {
        for (hn, h) in &pool {
            let j = graph::join(g, h)?;
            let d = suite::verify_join_depth(g, h, &Settings::default())?;
            println!(
                "{gn} * {hn}: e = {} (formula {}), depth check {:?}",
                graph::multiplicity_by_covers(&j),
                suite::join_multiplicity_formula(g, h),
                d.status
            );
        }
    }
    Ok(())
}
