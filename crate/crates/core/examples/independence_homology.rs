//! Reduced homology of independence complexes over Q and F_2.

use edge_ideals::complex::independence_complex;
use edge_ideals::{graph, FieldTag};

fn main() -> edge_ideals::Result<()> {
    for n in 4..=9 {
        let d = independence_complex(&graph::cycle(n)?);
        let h = d.reduced_homology_ranks(FieldTag::Q)?;
        let nonzero: Vec<_> = h.nonzero().collect();
        println!("Ind(C_{n}): dim {}, f = {:?}, H~ = {nonzero:?}", d.dim(), d.f_vector());
    }
    Ok(())
}
