//! Graphs realizing prescribed pairs of invariants.

use edge_ideals::suite::{self, DepthTarget, MultTarget, Settings};

fn main() -> edge_ideals::Result<()> {
    let settings = Settings::default();
    let built = [
        suite::construct_reg_dim(2, 4, &settings)?,
        suite::construct_mult_pair(3, MultTarget::Dim, 2, &settings)?,
        suite::construct_depth_pair(2, DepthTarget::Reg, 1, &settings)?,
    ];
    for c in &built {
        println!("{}: n = {}, all checks pass: {}", c.recipe, c.graph.n(), c.passed());
        for check in &c.checks {
            println!("  {} expected {:?} computed {:?}", check.claim, check.expected, check.computed);
        }
    }
    Ok(())
}
