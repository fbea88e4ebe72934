//! Exact homological and enumerative invariants of edge ideals of small graphs.
//!
//! Graphs live in [`graph`]; their edge ideals, powers and symbolic powers in
//! [`ideal`]; simplicial homology in [`complex`]; Betti tables by Hochster's
//! formula and by upper-Koszul complexes in [`betti`]; Hilbert series in
//! [`hilbert`]. The [`suite`] module checks regularity, depth and multiplicity
//! formulas for joins, self-joins, whiskered complete graphs, staircase graphs and
//! related constructions on concrete instances.
//!
//! ```
//! use edge_ideals::{graph, report};
//!
//! let w = graph::whiskered_complete(5, 3).unwrap();
//! let r = report::invariant_report(&w).unwrap();
//! assert_eq!((r.reg_s_mod_i, r.pd, r.depth, r.multiplicity), (1, 5, 3, 2));
//! ```

pub mod betti;
pub mod cli;
pub mod complex;
pub mod cost;
pub mod error;
pub mod graph;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod report;
pub mod suite;


pub use betti::{BettiTable, GradedBetti, View};
pub use complex::{FieldTag, HomologyProfile, SimplicialComplex};
pub use cost::CostGate;
pub use error::{Error, Result};
pub use graph::{CoverSet, Family, Graph};
pub use hilbert::{HilbertSeries, Poly};
pub use ideal::{Monomial, MonomialIdeal};
pub use report::{invariant_report, InvariantReport};
