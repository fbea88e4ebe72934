//! Hilbert series of `S/I(G)` from the f-vector of the independence complex.

use edge_ideals::graph;
use edge_ideals::hilbert::hilbert;

fn main() -> edge_ideals::Result<()> {
    for s in 1..=4 {
        let h = hilbert(&graph::star(s)?);
        println!("K_1,{s}: h(t) = {:?} over (1-t)^{}", h.h.coeffs(), h.d);
    }
    let p = hilbert(&graph::path(3)?);
    let cubed = hilbert(&graph::self_join(&graph::path(3)?, 3)?);
    // H(G^*l) = l H(G) - (l - 1)
    assert!(cubed.same_series(&p.scale_shift(3, -2)));
    println!("P_3^*3: h(t) = {:?}, e = {}", cubed.h.coeffs(), cubed.multiplicity());
    Ok(())
}
