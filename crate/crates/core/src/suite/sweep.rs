//! Exhaustive property checks over all labeled graphs on few vertices.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{betti_hochster_gated, betti_koszul_gated, View};
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::hilbert::hilbert;
use crate::ideal;

use super::{hochster_table, reg_ideal, Settings};

const MAX_SWEEP_VERTICES: usize = 7;
const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepCheck {
    /// `reg(S/I) <= dim(S/I)`.
    RegLeDim,
    /// `h(1)` equals the number of minimum vertex covers.
    MultiplicityCovers,
    /// `h_1 = n - dim`.
    H1Codim,
    /// `e = 1` forces `deg h >= 2` and `dim >= 2`.
    MultiplicityOne,
    /// Hochster and upper-Koszul multigraded Betti tables coincide.
    HochsterKoszul,
    /// `reg(I^(2)) = reg(I^2)`.
    MinhSquare,
}

impl SweepCheck {
    pub const ALL: [SweepCheck; 6] = [
        SweepCheck::RegLeDim,
        SweepCheck::MultiplicityCovers,
        SweepCheck::H1Codim,
        SweepCheck::MultiplicityOne,
        SweepCheck::HochsterKoszul,
        SweepCheck::MinhSquare,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.trim().replace('-', "_").as_str() {
            "reg_le_dim" => SweepCheck::RegLeDim,
            "multiplicity_covers" => SweepCheck::MultiplicityCovers,
            "h1_codim" => SweepCheck::H1Codim,
            "multiplicity_one" => SweepCheck::MultiplicityOne,
            "hochster_koszul" => SweepCheck::HochsterKoszul,
            "minh_square" => SweepCheck::MinhSquare,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown check `{other}` (reg_le_dim, multiplicity_covers, h1_codim, \
                     multiplicity_one, hochster_koszul, minh_square, all)"
                )))
            }
        })
    }

    /// Comma-separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<Self>> {
        if s.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut v = s.split(',').map(Self::parse).collect::<Result<Vec<_>>>()?;
        v.sort();
        v.dedup();
        Ok(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub check: SweepCheck,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    /// The first few failing graphs.
    pub counterexamples: Vec<Graph>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub graphs: u64,
    pub checks: Vec<CheckTally>,
}

impl SweepReport {
    pub fn failed(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn tally(&self, check: SweepCheck) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.check == check)
    }
}

/// Runs the selected checks on one graph with at least one edge.
pub fn check_graph(g: &Graph, checks: &[SweepCheck], settings: &Settings) -> Result<Vec<(SweepCheck, Outcome)>> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let covers = graph::minimal_vertex_covers(g);
    let dim = g.n() - covers.height;
    let series = hilbert(g);
    let needs_table = checks.contains(&SweepCheck::RegLeDim);
    let table = if needs_table { Some(hochster_table(g, settings)?) } else { None };
    let verdict = |ok: bool| if ok { Outcome::Pass } else { Outcome::Fail };
    let mut out = Vec::with_capacity(checks.len());
    for &c in checks {
        let o = match c {
            SweepCheck::RegLeDim => {
                let reg = table.as_ref().expect("table computed").regularity(View::Quotient);
                verdict(reg <= dim as i64)
            }
            SweepCheck::MultiplicityCovers => verdict(series.multiplicity() == covers.min_count as i64),
            SweepCheck::H1Codim => verdict(series.coeff(1) == covers.height as i64),
            SweepCheck::MultiplicityOne => {
                verdict(series.multiplicity() != 1 || (series.degree() >= 2 && dim >= 2))
            }
            SweepCheck::HochsterKoszul => {
                let h = betti_hochster_gated(g, settings.field, &settings.gate);
                let k = betti_koszul_gated(&ideal::edge_ideal(g), settings.field, &settings.gate);
                match (h, k) {
                    (Ok(h), Ok(k)) => verdict(h == k),
                    (Err(Error::CostExceeded { .. }), _) | (_, Err(Error::CostExceeded { .. })) => Outcome::Skipped,
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                }
            }
            SweepCheck::MinhSquare => {
                let sym = ideal::symbolic_power(g, 2).and_then(|i| reg_ideal(&i, settings));
                let ord = ideal::power(&ideal::edge_ideal(g), 2).and_then(|i| reg_ideal(&i, settings));
                match (sym, ord) {
                    (Ok(a), Ok(b)) => verdict(a == b),
                    (Err(Error::CostExceeded { .. }), _) | (_, Err(Error::CostExceeded { .. })) => Outcome::Skipped,
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                }
            }
        };
        out.push((c, o));
    }
    Ok(out)
}

/// Every labeled graph with at least one edge on `2..=n_max` vertices.
pub fn labeled_graphs(n: usize) -> impl ParallelIterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let m = pairs.len();
    (1u64..(1u64 << m)).into_par_iter().map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("pairs are valid edges")
    })
}

pub fn sweep_small_graphs(n_max: usize, checks: &[SweepCheck], settings: &Settings) -> Result<SweepReport> {
    if n_max > MAX_SWEEP_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "exhaustive sweep limited to {MAX_SWEEP_VERTICES} vertices"
        )));
    }
    let empty = || -> Vec<CheckTally> {
        checks
            .iter()
            .map(|&check| CheckTally {
                check,
                passed: 0,
                failed: 0,
                skipped: 0,
                counterexamples: Vec::new(),
            })
            .collect()
    };
    let merge = |mut a: Vec<CheckTally>, b: Vec<CheckTally>| {
        for (x, y) in a.iter_mut().zip(b) {
            x.passed += y.passed;
            x.failed += y.failed;
            x.skipped += y.skipped;
            x.counterexamples.extend(y.counterexamples);
            x.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        }
        a
    };
    let mut tallies = empty();
    let mut graphs = 0u64;
    for n in 2..=n_max {
        graphs += (1u64 << (n * (n - 1) / 2)) - 1;
        let part = labeled_graphs(n)
            .map(|g| -> Result<Vec<CheckTally>> {
                let mut t = empty();
                for (slot, (_, o)) in t.iter_mut().zip(check_graph(&g, checks, settings)?) {
                    match o {
                        Outcome::Pass => slot.passed += 1,
                        Outcome::Skipped => slot.skipped += 1,
                        Outcome::Fail => {
                            slot.failed += 1;
                            slot.counterexamples.push(g.clone());
                        }
                    }
                }
                Ok(t)
            })
            .try_reduce(empty, |a, b| Ok(merge(a, b)))?;
        tallies = merge(tallies, part);
    }
    for t in &mut tallies {
        t.counterexamples.sort_by_key(|g| (g.n(), g.edges().to_vec()));
    }
    Ok(SweepReport {
        n_max,
        graphs,
        checks: tallies,
    })
}
