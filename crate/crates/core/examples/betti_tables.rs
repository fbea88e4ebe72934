//! Graded Betti tables by Hochster's formula and by upper-Koszul complexes.

use edge_ideals::betti::{self, View};
use edge_ideals::{graph, ideal, FieldTag, MonomialIdeal};

fn main() -> edge_ideals::Result<()> {
    let g = graph::cycle(5)?;
    let by_subsets = betti::betti_hochster(&g, FieldTag::Q);
    let by_lattice = betti::betti_koszul(&ideal::edge_ideal(&g), FieldTag::Q)?;
    assert_eq!(by_subsets, by_lattice);
    let t = by_subsets.graded();
    for (i, j, r) in t.entries() {
        println!("beta_{{{i},{j}}} = {r}");
    }
    println!("reg(S/I) = {}, (pd, depth) = {:?}", t.regularity(View::Quotient), t.pd_depth());

    // any monomial ideal works with the Koszul route
    let i = MonomialIdeal::new(3, vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 1]])?;
    let t = betti::betti_koszul(&i, FieldTag::Q)?.graded();
    println!("{}: {}", i.to_json(), serde_json::to_string(&t).unwrap());
    Ok(())
}
