//! Builds graphs from the named families and combines them.

use edge_ideals::graph::{self, Family};

fn main() -> edge_ideals::Result<()> {
    for (name, params) in [("path", vec![5]), ("wheel", vec![6]), ("whiskered_complete", vec![4, 2]), ("staircase", vec![3])] {
        let g = Family::parse(name, &params)?.build()?;
        println!("{name} {params:?}: {}", g.to_json());
    }

    let k2 = graph::complete(2)?;
    let p3 = graph::path(3)?;
    let joined = graph::join(&k2, &p3)?;
    println!("K_2 * P_3 has {} vertices and {} edges", joined.n(), joined.edge_count());
    let cubed = graph::self_join(&p3, 3)?;
    println!("P_3^*3 has {} vertices and {} edges", cubed.n(), cubed.edge_count());
    println!("complement of C_5: {}", graph::complement(&graph::cycle(5)?).to_json());
    Ok(())
}
