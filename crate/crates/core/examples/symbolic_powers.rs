//! Symbolic powers of edge ideals against ordinary powers.

use edge_ideals::suite::{self, Settings};
use edge_ideals::{graph, ideal, CostGate, FieldTag};

fn main() -> edge_ideals::Result<()> {
    let g = graph::cycle(5)?;
    let gate = CostGate::default();
    for s in 1..=3 {
        let sym = ideal::symbolic_power(&g, s)?;
        let ord = ideal::power(&ideal::edge_ideal(&g), s)?;
        let rs = edge_ideals::betti::ideal_regularity(&sym, FieldTag::Q, &gate)?;
        let ro = edge_ideals::betti::ideal_regularity(&ord, FieldTag::Q, &gate)?;
        println!("C_5, s = {s}: {} vs {} generators, reg {rs} vs {ro}", sym.mu(), ord.mu());
    }
    for r in suite::verify_wheel_symbolic(5, 2, &Settings::default())? {
        println!("{} on {}: expected {:?}, computed {:?}", r.claim, r.instance, r.expected, r.computed);
    }
    Ok(())
}
