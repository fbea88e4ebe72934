//! The full invariant report of a graph as JSON.

use edge_ideals::{graph, invariant_report};

fn main() -> edge_ideals::Result<()> {
    let g = graph::wheel(6)?;
    let r = invariant_report(&g)?;
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
    Ok(())
}
