//! Named collections of checks and their aggregated report.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::ideal::{edge_ideal, MonomialIdeal};

use super::claims::*;
use super::constructions::*;
use super::{Settings, Status, VerificationResult as VR};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteKind {
    /// Every check below plus the single-family formulas.
    Default,
    Joins,
    Constructions,
    Minh,
}

impl SuiteKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(SuiteKind::Default),
            "joins" => Ok(SuiteKind::Joins),
            "constructions" => Ok(SuiteKind::Constructions),
            "minh" => Ok(SuiteKind::Minh),
            _ => Err(Error::InvalidParameter(format!(
                "unknown suite `{s}` (default, joins, constructions, minh)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub inapplicable: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteKind,
    pub results: Vec<VR>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn from_results(suite: SuiteKind, results: Vec<VR>) -> Self {
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::SkippedCost => summary.skipped += 1,
                Status::Inapplicable => summary.inapplicable += 1,
            }
        }
        SuiteReport { suite, results, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

type Task = (String, Box<dyn Fn(&Settings) -> Result<Vec<VR>> + Send + Sync>);

fn task(name: impl Into<String>, f: impl Fn(&Settings) -> Result<Vec<VR>> + Send + Sync + 'static) -> Task {
    (name.into(), Box::new(f))
}

/// The graphs whose pairwise joins are checked.
pub fn join_pool() -> Vec<(&'static str, Graph)> {
    let g = |r: Result<Graph>| r.expect("fixed small graph");
    vec![
        ("K_2", g(graph::complete(2))),
        ("K_3", g(graph::complete(3))),
        ("P_3", g(graph::path(3))),
        ("P_4", g(graph::path(4))),
        ("C_4", g(graph::cycle(4))),
        ("C_5", g(graph::cycle(5))),
        ("K_1,2", g(graph::star(2))),
    ]
}

/// Pairs of graphs whose disjoint union is checked for additivity.
pub fn additivity_pairs() -> Vec<(String, Graph, Graph)> {
    let g = |r: Result<Graph>| r.expect("fixed small graph");
    let k2 = g(graph::complete(2));
    vec![
        ("K_2 + K_2", k2.clone(), k2.clone()),
        ("P_6 + K_2", g(graph::path(6)), k2.clone()),
        ("F_2 + K_1,2", g(graph::staircase(2)), g(graph::star(2))),
        ("C_5 + K_2", g(graph::cycle(5)), k2.clone()),
        ("P_4 + C_4", g(graph::path(4)), g(graph::cycle(4))),
        ("K_3 + P_3", g(graph::complete(3)), g(graph::path(3))),
        ("C_5 + C_5", g(graph::cycle(5)), g(graph::cycle(5))),
        ("W(3,2) + F_2", g(graph::whiskered_complete(3, 2)), g(graph::staircase(2))),
        ("K_1,2 + K_1,3", g(graph::star(2)), g(graph::star(3))),
        ("P_5 + C_6", g(graph::path(5)), g(graph::cycle(6))),
    ]
    .into_iter()
    .map(|(n, a, b)| (n.to_string(), a, b))
    .collect()
}

/// `(I, J, s)` instances of the two-block Artinian regularity formula.
pub fn artinian_instances() -> Vec<(String, MonomialIdeal, MonomialIdeal, u32)> {
    let zero = MonomialIdeal::zero;
    let mut out = Vec::new();
    for s in [2u32, 3] {
        out.push((format!("(x^{s}, y^{s})"), zero(1), zero(1), s));
        out.push((format!("I(K_2) | 0, s={s}"), edge_ideal(&graph::complete(2).unwrap()), zero(1), s));
        out.push((
            format!("I(K_2) | I(K_2), s={s}"),
            edge_ideal(&graph::complete(2).unwrap()),
            edge_ideal(&graph::complete(2).unwrap()),
            s,
        ));
        out.push((format!("I(P_3) | 0 on 2 vars, s={s}"), edge_ideal(&graph::path(3).unwrap()), zero(2), s));
    }
    out
}

fn basics() -> Vec<Task> {
    let mut t = Vec::new();
    for n in 2..=7 {
        t.push(task(format!("K_{n}"), move |s| verify_complete(n, s)));
    }
    for n in 1..=6 {
        for r in 1..=n {
            t.push(task(format!("W({n},{r})"), move |s| verify_whiskered(n, r, s)));
        }
    }
    for n in 1..=4 {
        t.push(task(format!("F_{n}"), move |s| verify_staircase(n, s)));
    }
    for v in 2..=9 {
        t.push(task(format!("P_{v}"), move |_| verify_path(v)));
    }
    for s in 1..=5 {
        t.push(task(format!("K_1,{s}"), move |_| verify_star(s)));
    }
    for (name, i, j, s) in artinian_instances() {
        t.push(task(name.clone(), move |st| {
            Ok(relabel(vec![verify_artinian_reg(&i, &j, s, st)?], &name))
        }));
    }
    for n in 4..=7 {
        t.push(task(format!("complement of C_{n}"), move |s| {
            Ok(relabel(
                vec![verify_complement_reg(&graph::cycle(n)?, s)?],
                &format!("complement of C_{n}"),
            ))
        }));
    }
    for (name, a, b) in additivity_pairs() {
        t.push(task(name.clone(), move |s| {
            Ok(relabel(verify_disjoint_union_additivity(&a, &b, s)?, &name))
        }));
    }
    t
}

fn joins() -> Vec<Task> {
    let mut t = Vec::new();
    let pool = join_pool();
    for (gn, g) in &pool {
        for (hn, h) in &pool {
            let (g, h) = (g.clone(), h.clone());
            let name = format!("{gn} * {hn}");
            t.push(task(name.clone(), move |s| {
                Ok(relabel(
                    vec![verify_join_multiplicity(&g, &h)?, verify_join_depth(&g, &h, s)?],
                    &name,
                ))
            }));
        }
    }
    for (gn, g) in pool.iter().filter(|(n, _)| ["K_2", "P_3", "K_1,2", "P_4"].contains(n)) {
        for l in 1..=3 {
            let g = g.clone();
            let name = format!("{gn}^*{l}");
            t.push(task(name.clone(), move |s| Ok(relabel(verify_self_join(&g, l, s)?, &name))));
        }
    }
    let k = |n| graph::complete(n).expect("complete graph");
    let symbolic: Vec<(&str, Vec<Graph>, u32)> = vec![
        ("K_2 * K_2, s=1", vec![k(2), k(2)], 1),
        ("K_2 * K_2, s=2", vec![k(2), k(2)], 2),
        ("P_3 * K_2, s=2", vec![graph::path(3).unwrap(), k(2)], 2),
        ("K_1 * C_5, s=2", vec![graph::edgeless(1).unwrap(), graph::cycle(5).unwrap()], 2),
        ("K_2 * K_2 * K_2, s=2", vec![k(2), k(2), k(2)], 2),
    ];
    for (name, gs, s) in symbolic {
        t.push(task(name, move |st| {
            Ok(relabel(vec![verify_join_symbolic_reg(&gs, s, st)?], name))
        }));
    }
    let co = |n| graph::complement(&graph::cycle(n).unwrap());
    let reg3: Vec<(&str, Graph, Graph)> = vec![
        ("co-C_5 * K_2", co(5), k(2)),
        ("co-C_6 * W(3,2)", co(6), graph::whiskered_complete(3, 2).unwrap()),
        ("co-C_5 * co-C_5", co(5), co(5)),
    ];
    for (name, g, h) in reg3 {
        t.push(task(name, move |s| Ok(relabel(construct_reg3_join(&g, &h, s)?.checks, name))));
    }
    t
}

fn minh() -> Vec<Task> {
    let mut t = Vec::new();
    let cases: Vec<(&str, Graph, u32)> = vec![
        ("C_5", graph::cycle(5).unwrap(), 3),
        ("C_7", graph::cycle(7).unwrap(), 2),
        ("W_4", graph::wheel(4).unwrap(), 2),
        ("W_5", graph::wheel(5).unwrap(), 2),
        ("K_2,3", graph::complete_multipartite(&[2, 3]).unwrap(), 2),
        ("K_2,2,1", graph::complete_multipartite(&[2, 2, 1]).unwrap(), 2),
        ("P_4", graph::path(4).unwrap(), 2),
    ];
    for (name, g, smax) in cases {
        t.push(task(name, move |s| {
            let mut out = check_minh(&g, smax, s)?;
            for (k, r) in out.iter_mut().enumerate() {
                r.instance = format!("{name}, s={}", k + 1);
            }
            Ok(out)
        }));
    }
    for (n, s) in [(4, 2), (5, 2), (5, 3)] {
        t.push(task(format!("wheel {n}, s={s}"), move |st| verify_wheel_symbolic(n, s, st)));
    }
    t
}

/// Every cell of the construction grids: `reg_dim` for `1 <= r <= d <= 4`,
/// `mult_pair` for `e <= 3` and values `<= 3`, `depth_pair` for `delta, v <= 3`.
fn constructions() -> Vec<Task> {
    let mut t = Vec::new();
    for d in 1..=4 {
        for r in 1..=d {
            t.push(task(format!("reg_dim({r},{d})"), move |s| Ok(construct_reg_dim(r, d, s)?.checks)));
        }
    }
    for e in 1..=3 {
        for target in [MultTarget::Reg, MultTarget::Hdeg, MultTarget::Depth, MultTarget::Dim] {
            for v in 1..=3 {
                if matches!(target, MultTarget::Hdeg | MultTarget::Dim) && e * v < 2 {
                    continue;
                }
                t.push(task(format!("mult_pair({e},{target:?},{v})"), move |s| {
                    Ok(construct_mult_pair(e, target, v, s)?.checks)
                }));
            }
        }
    }
    for delta in 1..=3 {
        for target in [DepthTarget::Reg, DepthTarget::Hdeg] {
            for v in 1..=3 {
                t.push(task(format!("depth_pair({delta},{target:?},{v})"), move |s| {
                    Ok(construct_depth_pair(delta, target, v, s)?.checks)
                }));
            }
        }
    }
    t
}

fn run_tasks(tasks: Vec<Task>, settings: &Settings) -> Vec<VR> {
    tasks
        .into_par_iter()
        .map(|(name, f)| {
            log::debug!("running {name}");
            f(settings).unwrap_or_else(|e| vec![VR::errored("error", &name, &e)])
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn run_suite(kind: SuiteKind, settings: &Settings) -> SuiteReport {
    let tasks = match kind {
        SuiteKind::Joins => joins(),
        SuiteKind::Minh => minh(),
        SuiteKind::Constructions => constructions(),
        SuiteKind::Default => {
            let mut t = basics();
            t.extend(joins());
            t.extend(minh());
            t.extend(constructions());
            t
        }
    };
    SuiteReport::from_results(kind, run_tasks(tasks, settings))
}
