//! Graphs realizing prescribed pairs of invariants, each returned with checks of
//! the invariants it is meant to have.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::hilbert::hilbert;

use super::{hochster_table, Settings, VerificationResult as VR};

/// A constructed graph, how it was built, and checks of its target invariants.
#[derive(Clone, Debug, Serialize)]
pub struct Construction {
    pub recipe: String,
    pub graph: Graph,
    pub checks: Vec<VR>,
}

impl Construction {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The invariant paired with the multiplicity in [`construct_mult_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MultTarget {
    Reg,
    Hdeg,
    Depth,
    Dim,
}

/// The invariant paired with the depth in [`construct_depth_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DepthTarget {
    Reg,
    Hdeg,
}

impl MultTarget {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "reg" => Ok(MultTarget::Reg),
            "hdeg" => Ok(MultTarget::Hdeg),
            "depth" => Ok(MultTarget::Depth),
            "dim" => Ok(MultTarget::Dim),
            _ => Err(Error::InvalidParameter(format!("unknown target `{s}` (reg, hdeg, depth, dim)"))),
        }
    }
}

impl DepthTarget {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "reg" => Ok(DepthTarget::Reg),
            "hdeg" => Ok(DepthTarget::Hdeg),
            _ => Err(Error::InvalidParameter(format!("unknown target `{s}` (reg, hdeg)"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Invariant {
    Reg,
    Depth,
    Dim,
    Hdeg,
    Mult,
}

impl Invariant {
    fn name(self) -> &'static str {
        match self {
            Invariant::Reg => "reg",
            Invariant::Depth => "depth",
            Invariant::Dim => "dim",
            Invariant::Hdeg => "h_degree",
            Invariant::Mult => "multiplicity",
        }
    }
}

/// Checks `g` against each `(invariant, expected)` pair, running Hochster at most once.
fn check(claim: &str, recipe: &str, g: &Graph, want: &[(Invariant, usize)], settings: &Settings) -> Result<Vec<VR>> {
    let needs_betti = want.iter().any(|(inv, _)| matches!(inv, Invariant::Reg | Invariant::Depth));
    let table = if needs_betti {
        match hochster_table(g, settings) {
            Ok(t) => Some(Ok(t)),
            Err(e @ Error::CostExceeded { .. }) => Some(Err(e)),
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let mut out = Vec::new();
    for &(inv, expected) in want {
        let id = format!("{claim}_{}", inv.name());
        let computed = match inv {
            Invariant::Reg | Invariant::Depth => match table.as_ref().expect("table computed") {
                Ok(t) if inv == Invariant::Reg => t.regularity(crate::betti::View::Quotient) as usize,
                Ok(t) => t.pd_depth().1,
                Err(e) => {
                    out.push(VR::errored(&id, recipe, e));
                    continue;
                }
            },
            Invariant::Dim => graph::krull_dim(g),
            Invariant::Hdeg => hilbert(g).degree(),
            Invariant::Mult => graph::multiplicity_by_covers(g),
        };
        out.push(VR::compare(&id, recipe, expected, computed));
    }
    Ok(out)
}

fn positive(vals: &[(&str, usize)]) -> Result<()> {
    for &(name, v) in vals {
        if v == 0 {
            return Err(Error::InvalidParameter(format!("{name} must be positive")));
        }
    }
    Ok(())
}

/// `(r - 1)` disjoint edges together with `F_{d-r+1}`: `reg(S/I) = r`, `dim = d`.
pub fn reg_dim_graph(r: usize, d: usize) -> Result<(Graph, String)> {
    positive(&[("r", r), ("d", d)])?;
    if r > d {
        return Err(Error::InvalidParameter(format!("need r <= d, got r={r}, d={d}")));
    }
    let g = graph::disjoint_union(
        &graph::disjoint_copies(&graph::complete(2)?, r - 1)?,
        &graph::staircase(d - r + 1)?,
    )?;
    Ok((g, format!("{} x K_2 + F_{}", r - 1, d - r + 1)))
}

pub fn construct_reg_dim(r: usize, d: usize, settings: &Settings) -> Result<Construction> {
    let (graph, recipe) = reg_dim_graph(r, d)?;
    let checks = check("reg_dim", &recipe, &graph, &[(Invariant::Reg, r), (Invariant::Dim, d)], settings)?;
    Ok(Construction { recipe, graph, checks })
}

/// A graph with multiplicity `e` and the chosen invariant equal to `v`.
///
/// * `reg`: `P^{*e}` with `P = P_{3v}` for odd `v`, `P_{3v+1}` for even `v`.
/// * `hdeg`, `dim`: `K_e` when `v = 1`, else `K_{1,v}^{*e}`; requires `e v >= 2`.
/// * `depth`: `W(e + v, v)`.
pub fn mult_pair_graph(e: usize, target: MultTarget, v: usize) -> Result<(Graph, String)> {
    positive(&[("e", e), ("v", v)])?;
    match target {
        MultTarget::Reg => {
            let len = if v % 2 == 1 { 3 * v } else { 3 * v + 1 };
            Ok((graph::self_join(&graph::path(len)?, e)?, format!("P_{len}^*{e}")))
        }
        MultTarget::Hdeg | MultTarget::Dim => {
            if e * v < 2 {
                return Err(Error::InvalidParameter(
                    "multiplicity 1 with h-degree or dimension 1 is impossible (need e*v >= 2)".into(),
                ));
            }
            if v == 1 {
                Ok((graph::complete(e)?, format!("K_{e}")))
            } else {
                Ok((graph::self_join(&graph::star(v)?, e)?, format!("K_1,{v}^*{e}")))
            }
        }
        MultTarget::Depth => Ok((graph::whiskered_complete(e + v, v)?, format!("W({},{v})", e + v))),
    }
}

pub fn construct_mult_pair(e: usize, target: MultTarget, v: usize, settings: &Settings) -> Result<Construction> {
    let (graph, recipe) = mult_pair_graph(e, target, v)?;
    let inv = match target {
        MultTarget::Reg => Invariant::Reg,
        MultTarget::Hdeg => Invariant::Hdeg,
        MultTarget::Depth => Invariant::Depth,
        MultTarget::Dim => Invariant::Dim,
    };
    let checks = check("mult_pair", &recipe, &graph, &[(Invariant::Mult, e), (inv, v)], settings)?;
    Ok(Construction { recipe, graph, checks })
}

/// A graph with depth `delta` and the chosen invariant equal to `v`, by cases:
///
/// * `reg`: `P_{3v}^{*2}` if `delta = 1`; `W(delta+1, delta)` if `v = 1`;
///   `P_{3(v-delta+1)}^{*2}` plus `delta - 1` edges if `delta <= v`;
///   otherwise `W(delta-v+2, delta-v+1)` plus `v - 1` edges.
/// * `hdeg`: `K_{1,v}` if `delta = 1`; `F_delta` if `v = 1`;
///   `K_{1,v-delta+1}` plus `delta - 1` edges if `delta <= v`;
///   otherwise `F_{delta-v+1}` plus `v - 1` edges.
pub fn depth_pair_graph(delta: usize, target: DepthTarget, v: usize) -> Result<(Graph, String)> {
    positive(&[("delta", delta), ("v", v)])?;
    let edges = |k: usize| graph::disjoint_copies(&graph::complete(2)?, k);
    let with_edges = |g: Graph, name: String, k: usize| -> Result<(Graph, String)> {
        if k == 0 {
            Ok((g, name))
        } else {
            Ok((graph::disjoint_union(&g, &edges(k)?)?, format!("{name} + {k} x K_2")))
        }
    };
    match target {
        DepthTarget::Reg => {
            if delta == 1 {
                Ok((graph::self_join(&graph::path(3 * v)?, 2)?, format!("P_{}^*2", 3 * v)))
            } else if v == 1 {
                Ok((graph::whiskered_complete(delta + 1, delta)?, format!("W({},{delta})", delta + 1)))
            } else if delta <= v {
                let len = 3 * (v - delta + 1);
                with_edges(graph::self_join(&graph::path(len)?, 2)?, format!("P_{len}^*2"), delta - 1)
            } else {
                let (a, b) = (delta - v + 2, delta - v + 1);
                with_edges(graph::whiskered_complete(a, b)?, format!("W({a},{b})"), v - 1)
            }
        }
        DepthTarget::Hdeg => {
            if delta == 1 {
                Ok((graph::star(v)?, format!("K_1,{v}")))
            } else if v == 1 {
                Ok((graph::staircase(delta)?, format!("F_{delta}")))
            } else if delta <= v {
                let leaves = v - delta + 1;
                with_edges(graph::star(leaves)?, format!("K_1,{leaves}"), delta - 1)
            } else {
                let k = delta - v + 1;
                with_edges(graph::staircase(k)?, format!("F_{k}"), v - 1)
            }
        }
    }
}

pub fn construct_depth_pair(delta: usize, target: DepthTarget, v: usize, settings: &Settings) -> Result<Construction> {
    let (graph, recipe) = depth_pair_graph(delta, target, v)?;
    let inv = match target {
        DepthTarget::Reg => Invariant::Reg,
        DepthTarget::Hdeg => Invariant::Hdeg,
    };
    let checks = check("depth_pair", &recipe, &graph, &[(Invariant::Depth, delta), (inv, v)], settings)?;
    Ok(Construction { recipe, graph, checks })
}

/// `G * H` for `reg(I(G)) = 3` and `reg(I(H)) <= 3`, checked to have `reg(I) = 3`.
/// Inputs failing the hypotheses give an `inapplicable` check.
pub fn construct_reg3_join(g: &Graph, h: &Graph, settings: &Settings) -> Result<Construction> {
    let graph = graph::join(g, h)?;
    let recipe = format!("{} * {}", g.to_json(), h.to_json());
    let reg_i = |x: &Graph| -> Result<i64> {
        if x.is_edgeless() {
            return Err(Error::Edgeless);
        }
        Ok(super::reg_quotient(x, settings)? + 1)
    };
    let (rg, rh) = (reg_i(g)?, reg_i(h)?);
    let check = if rg != 3 || rh > 3 {
        VR::inapplicable(
            "reg3_join",
            &recipe,
            3i64,
            &format!("need reg(I(G)) = 3 and reg(I(H)) <= 3, got {rg} and {rh}"),
        )
    } else {
        VR::measure("reg3_join", &recipe, 3i64, || Ok(super::reg_quotient(&graph, settings)? + 1))?
    };
    Ok(Construction {
        recipe,
        graph,
        checks: vec![check],
    })
}
