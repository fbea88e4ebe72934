//! One-stop invariant summary of `S/I(G)`.

use serde::{Deserialize, Serialize};

use crate::betti::{graded_betti_hochster, GradedBetti, View};
use crate::complex::FieldTag;
use crate::cost::CostGate;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::hilbert::{hilbert, HilbertSeries};

/// Which fields an invariant report is computed over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldChoice {
    Q,
    F2,
    /// Rationals, with a shadow run over `F_2`.
    #[default]
    Both,
}

impl FieldChoice {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q" => Ok(FieldChoice::Q),
            "f2" => Ok(FieldChoice::F2),
            "both" => Ok(FieldChoice::Both),
            other => Err(Error::InvalidParameter(format!("unknown field `{other}` (expected q, f2, both)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub cohen_macaulay: bool,
    pub linear_resolution: bool,
}

/// Regularity and projective dimension from the second field of a `both` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shadow {
    pub field: FieldTag,
    #[serde(rename = "reg_SmodI")]
    pub reg_s_mod_i: i64,
    pub pd: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub edges: usize,
    pub field: FieldTag,
    #[serde(rename = "reg_SmodI")]
    pub reg_s_mod_i: i64,
    pub pd: usize,
    pub depth: usize,
    pub dim: usize,
    pub height: usize,
    pub multiplicity: usize,
    pub h_poly: HilbertSeries,
    pub deg_h: usize,
    pub nu: usize,
    pub flags: Flags,
    pub field_agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shadow: Option<Shadow>,
    pub betti: GradedBetti,
}

/// Report over the rationals with an `F_2` shadow run and the default cost gate.
pub fn invariant_report(g: &Graph) -> Result<InvariantReport> {
    invariant_report_with(g, FieldChoice::Both, &CostGate::default())
}

pub fn invariant_report_with(g: &Graph, fields: FieldChoice, gate: &CostGate) -> Result<InvariantReport> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let primary = match fields {
        FieldChoice::F2 => FieldTag::F2,
        _ => FieldTag::Q,
    };
    let betti = graded_betti_hochster(g, primary, gate)?;
    let reg = betti.regularity(View::Quotient);
    let (pd, depth) = betti.pd_depth();
    let shadow = if fields == FieldChoice::Both {
        let other = graded_betti_hochster(g, FieldTag::F2, gate)?;
        Some(Shadow {
            field: FieldTag::F2,
            reg_s_mod_i: other.regularity(View::Quotient),
            pd: other.pd_depth().0,
        })
    } else {
        None
    };
    let field_agreement = shadow.as_ref().map_or(true, |s| s.reg_s_mod_i == reg && s.pd == pd);
    if !field_agreement {
        log::warn!("regularity or projective dimension differs between Q and F_2");
    }
    let covers = graph::minimal_vertex_covers(g);
    let dim = g.n() - covers.height;
    let h_poly = hilbert(g);
    Ok(InvariantReport {
        n: g.n(),
        edges: g.edge_count(),
        field: primary,
        reg_s_mod_i: reg,
        pd,
        depth,
        dim,
        height: covers.height,
        multiplicity: covers.min_count,
        deg_h: h_poly.degree(),
        h_poly,
        nu: graph::induced_matching_number(g),
        flags: Flags {
            cohen_macaulay: depth == dim,
            linear_resolution: betti.has_linear_resolution(),
        },
        field_agreement,
        shadow,
        betti,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, join, path, whiskered_complete};

    #[test]
    fn whiskered() {
        let r = invariant_report(&whiskered_complete(5, 3).unwrap()).unwrap();
        assert_eq!((r.reg_s_mod_i, r.pd, r.depth, r.multiplicity), (1, 5, 3, 2));
        assert!(r.flags.linear_resolution);
        assert!(r.field_agreement);
    }

    #[test]
    fn path_five() {
        let r = invariant_report(&path(5).unwrap()).unwrap();
        assert_eq!((r.dim, r.multiplicity), (3, 1));
    }

    #[test]
    fn join_of_edges_has_depth_one() {
        let k2 = complete(2).unwrap();
        let r = invariant_report_with(&join(&k2, &k2).unwrap(), FieldChoice::Q, &CostGate::default()).unwrap();
        assert_eq!(r.depth, 1);
        assert!(r.shadow.is_none());
    }

    #[test]
    fn edgeless_rejected() {
        assert_eq!(
            invariant_report(&crate::graph::edgeless(3).unwrap()),
            Err(Error::Edgeless)
        );
    }
}
