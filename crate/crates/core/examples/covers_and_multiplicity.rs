//! Minimal vertex covers, height, dimension and multiplicity of an edge ideal.

use edge_ideals::graph;
use edge_ideals::hilbert::hilbert;

fn main() -> edge_ideals::Result<()> {
    let g = graph::cycle(6)?;
    let covers = graph::minimal_vertex_covers(&g);
    println!("minimal covers of C_6: {:?}", covers.covers);
    println!("height {}, dim {}", covers.height, graph::krull_dim(&g));
    println!("minimum covers: {}", covers.min_count);
    println!("e(S/I) from h(1): {}", hilbert(&g).multiplicity());
    Ok(())
}
