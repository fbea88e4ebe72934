//! Verifiers for closed-form statements about edge ideals.

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::hilbert::{hilbert, HilbertSeries, Poly};
use crate::ideal::{self, MonomialIdeal};

use super::{depth, hochster_table, reg_ideal, reg_quotient, Settings, VerificationResult as VR};

fn label(g: &Graph) -> String {
    g.to_json()
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.is_edgeless() {
        Err(Error::Edgeless)
    } else {
        Ok(())
    }
}

/// `reg((I + <y>)^(s) + (J + <x>)^(s)) = 2s - 1` for squarefree `I` in the `x`
/// variables and `J` in the `y` variables, each zero or generated in degree >= 2.
pub fn verify_artinian_reg(i: &MonomialIdeal, j: &MonomialIdeal, s: u32, settings: &Settings) -> Result<VR> {
    for part in [i, j] {
        if !part.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if part.gens().iter().any(|g| g.degree() < 2) {
            return Err(Error::InvalidParameter("generators must have degree at least 2".into()));
        }
    }
    if s == 0 || i.n() == 0 || j.n() == 0 {
        return Err(Error::InvalidParameter("need s >= 1 and at least one variable on each side".into()));
    }
    let (m, n) = (i.n(), j.n());
    let total = m + n;
    let x_mask = graph::full_mask(m);
    let y_mask = graph::full_mask(total) & !x_mask;
    let left = ideal::sum(&i.embed(total, 0)?, &MonomialIdeal::variables(total, y_mask))?;
    let right = ideal::sum(&j.embed(total, m)?, &MonomialIdeal::variables(total, x_mask))?;
    let k = ideal::sum(&ideal::symbolic_power_of(&left, s)?, &ideal::symbolic_power_of(&right, s)?)?;
    let instance = format!("I={} J={} s={s}", i.to_json(), j.to_json());
    VR::measure("artinian_reg", &instance, 2 * s as i64 - 1, || reg_ideal(&k, settings))
}

/// Joins of graphs: `reg(I(G)^(s)) = max { reg(I(G_j)^(i)) - i + s }` over factors
/// with edges and `1 <= i <= s`. Edgeless factors do not enter the maximum.
pub fn verify_join_symbolic_reg(graphs: &[Graph], s: u32, settings: &Settings) -> Result<VR> {
    if graphs.len() < 2 || s == 0 {
        return Err(Error::InvalidParameter("need at least two graphs and s >= 1".into()));
    }
    if graphs.iter().all(Graph::is_edgeless) {
        return Err(Error::Edgeless);
    }
    let joined = graphs[1..].iter().try_fold(graphs[0].clone(), |acc, h| graph::join(&acc, h))?;
    let instance = format!(
        "[{}] s={s}",
        graphs.iter().map(label).collect::<Vec<_>>().join(", ")
    );
    let mut rhs = i64::MIN;
    for g in graphs.iter().filter(|g| !g.is_edgeless()) {
        for i in 1..=s {
            let r = match reg_ideal(&ideal::symbolic_power(g, i)?, settings) {
                Ok(r) => r,
                Err(e @ Error::CostExceeded { .. }) => return Ok(VR::errored("join_symbolic_reg", &instance, &e)),
                Err(e) => return Err(e),
            };
            rhs = rhs.max(r - i as i64 + s as i64);
        }
    }
    VR::measure("join_symbolic_reg", &instance, rhs, || {
        reg_ideal(&ideal::symbolic_power(&joined, s)?, settings)
    })
}

/// Wheels `W_n = K_1 * C_n`: `reg(I^(s)) = reg(I^s) = 2s + nu(C_n) - 1` for `s >= 2`.
pub fn verify_wheel_symbolic(n: usize, s: u32, settings: &Settings) -> Result<Vec<VR>> {
    if n < 4 || s < 2 {
        return Err(Error::InvalidParameter("wheel check needs n >= 4 and s >= 2".into()));
    }
    let w = graph::wheel(n)?;
    let expected = 2 * s as i64 + graph::induced_matching_number(&graph::cycle(n)?) as i64 - 1;
    let instance = format!("wheel {n}, s={s}");
    let i = ideal::edge_ideal(&w);
    Ok(vec![
        VR::measure("wheel_symbolic_reg", &instance, expected, || {
            reg_ideal(&ideal::symbolic_power(&w, s)?, settings)
        })?,
        VR::measure("wheel_ordinary_reg", &instance, expected, || {
            reg_ideal(&ideal::power(&i, s)?, settings)
        })?,
    ])
}

/// `reg(I(G)^(s)) = reg(I(G)^s)` for `s = 1..=s_max`; expected is the ordinary power.
pub fn check_minh(g: &Graph, s_max: u32, settings: &Settings) -> Result<Vec<VR>> {
    require_edges(g)?;
    let i = ideal::edge_ideal(g);
    let mut out = Vec::new();
    for s in 1..=s_max {
        let instance = format!("{} s={s}", label(g));
        let ordinary = match ideal::power(&i, s).and_then(|p| reg_ideal(&p, settings)) {
            Ok(r) => r,
            Err(e @ Error::CostExceeded { .. }) => {
                out.push(VR::errored("minh", &instance, &e));
                continue;
            }
            Err(e) => return Err(e),
        };
        out.push(VR::measure("minh", &instance, ordinary, || {
            reg_ideal(&ideal::symbolic_power(g, s)?, settings)
        })?);
    }
    Ok(out)
}

/// Multiplicity of a join by the trichotomy on `m + hgt(H)` versus `n + hgt(G)`.
pub fn join_multiplicity_formula(g: &Graph, h: &Graph) -> usize {
    let (cg, ch) = (graph::minimal_vertex_covers(g), graph::minimal_vertex_covers(h));
    let left = g.n() + ch.height;
    let right = h.n() + cg.height;
    match left.cmp(&right) {
        std::cmp::Ordering::Equal => cg.min_count + ch.min_count,
        std::cmp::Ordering::Greater => cg.min_count,
        std::cmp::Ordering::Less => ch.min_count,
    }
}

pub fn verify_join_multiplicity(g: &Graph, h: &Graph) -> Result<VR> {
    require_edges(g)?;
    require_edges(h)?;
    let j = graph::join(g, h)?;
    Ok(VR::compare(
        "join_multiplicity",
        &format!("{} * {}", label(g), label(h)),
        join_multiplicity_formula(g, h),
        graph::multiplicity_by_covers(&j),
    ))
}

/// `depth(S/I(G * H)) = 1`.
pub fn verify_join_depth(g: &Graph, h: &Graph, settings: &Settings) -> Result<VR> {
    let j = graph::join(g, h)?;
    VR::measure("join_depth", &format!("{} * {}", label(g), label(h)), 1usize, || depth(&j, settings))
}

/// Self-joins: `reg` unchanged, `e` scales by `l`, and `H(G^{*l}) = l H(G) - (l - 1)`.
pub fn verify_self_join(g: &Graph, l: usize, settings: &Settings) -> Result<Vec<VR>> {
    require_edges(g)?;
    let gl = graph::self_join(g, l)?;
    let instance = format!("{} l={l}", label(g));
    let reg_g = reg_quotient(g, settings)?;
    let series_g = hilbert(g);
    let series_gl = hilbert(&gl);
    let target = series_g.scale_shift(l as i64, -(l as i64 - 1));
    let (expected, computed) = target.cross_multiplied(&series_gl);
    Ok(vec![
        VR::measure("self_join_reg", &instance, reg_g, || reg_quotient(&gl, settings))?,
        VR::compare(
            "self_join_multiplicity",
            &instance,
            l * graph::multiplicity_by_covers(g),
            graph::multiplicity_by_covers(&gl),
        ),
        VR::compare("self_join_hilbert", &instance, expected, computed),
    ])
}

/// `W(n, r)`: linear resolution, `pd = n`, `depth = r`, and `e = n - r` when `r < n`.
pub fn verify_whiskered(n: usize, r: usize, settings: &Settings) -> Result<Vec<VR>> {
    let w = graph::whiskered_complete(n, r)?;
    let instance = format!("W({n},{r})");
    let t = match hochster_table(&w, settings) {
        Ok(t) => t,
        Err(e @ Error::CostExceeded { .. }) => return Ok(vec![VR::errored("whiskered", &instance, &e)]),
        Err(e) => return Err(e),
    };
    let (pd, dep) = t.pd_depth();
    let mut out = vec![
        VR::compare("whiskered_linear", &instance, true, t.has_linear_resolution()),
        VR::compare("whiskered_pd", &instance, n, pd),
        VR::compare("whiskered_depth", &instance, r, dep),
    ];
    if r < n {
        out.push(VR::compare(
            "whiskered_multiplicity",
            &instance,
            n - r,
            graph::multiplicity_by_covers(&w),
        ));
    }
    Ok(out)
}

/// `reg(S/I(G^c)) = 2` when `G` is triangle-free and not a forest.
pub fn verify_complement_reg(g: &Graph, settings: &Settings) -> Result<VR> {
    let instance = format!("complement of {}", label(g));
    if graph::has_triangle(g) || graph::is_forest(g) {
        return Ok(VR::inapplicable(
            "complement_reg",
            &instance,
            2i64,
            "graph has a triangle or is a forest",
        ));
    }
    VR::measure("complement_reg", &instance, 2i64, || reg_quotient(&graph::complement(g), settings))
}

/// `K_n`: `e = n` and `depth = 1`.
pub fn verify_complete(n: usize, settings: &Settings) -> Result<Vec<VR>> {
    let k = graph::complete(n)?;
    let instance = format!("K_{n}");
    Ok(vec![
        VR::compare("complete_multiplicity", &instance, n, graph::multiplicity_by_covers(&k)),
        VR::measure("complete_depth", &instance, 1usize, || depth(&k, settings))?,
    ])
}

/// `F_n`: Cohen–Macaulay of dimension `n`, `reg(S/I) = 1`, `C(n+1, 2)` generators.
pub fn verify_staircase(n: usize, settings: &Settings) -> Result<Vec<VR>> {
    let f = graph::staircase(n)?;
    let instance = format!("F_{n}");
    let t = hochster_table(&f, settings)?;
    Ok(vec![
        VR::compare("staircase_dim", &instance, n, graph::krull_dim(&f)),
        VR::compare("staircase_depth", &instance, n, t.pd_depth().1),
        VR::compare("staircase_reg", &instance, 1i64, t.regularity(crate::betti::View::Quotient)),
        VR::compare("staircase_generators", &instance, n * (n + 1) / 2, ideal::edge_ideal(&f).mu()),
    ])
}

/// Paths: `dim(S/I(P_{2k})) = k`; `dim(S/I(P_{2k+1})) = k + 1` and `e = 1`.
pub fn verify_path(vertices: usize) -> Result<Vec<VR>> {
    if vertices < 2 {
        return Err(Error::InvalidParameter("path needs at least two vertices".into()));
    }
    let p = graph::path(vertices)?;
    let instance = format!("P_{vertices}");
    let k = vertices / 2;
    let mut out = vec![VR::compare(
        "path_dim",
        &instance,
        if vertices % 2 == 0 { k } else { k + 1 },
        graph::krull_dim(&p),
    )];
    if vertices % 2 == 1 {
        out.push(VR::compare("path_multiplicity", &instance, 1usize, graph::multiplicity_by_covers(&p)));
    }
    Ok(out)
}

/// `H(S/I(K_{1,s})) = 1/(1-t)^s + 1/(1-t) - 1`, so `deg h = s` and, for `s >= 2`, `e = 1`.
pub fn star_series(s: usize) -> HilbertSeries {
    let num = Poly::constant(1)
        .add(&Poly::one_minus_t_pow(s - 1))
        .sub(&Poly::one_minus_t_pow(s));
    HilbertSeries::new(num, s)
}

pub fn verify_star(s: usize) -> Result<Vec<VR>> {
    let st = graph::star(s)?;
    let instance = format!("K_1,{s}");
    let series = hilbert(&st);
    let (expected, computed) = star_series(s).cross_multiplied(&series);
    let mut out = vec![
        VR::compare("star_hilbert", &instance, expected, computed),
        VR::compare("star_h_degree", &instance, s, series.degree()),
    ];
    if s >= 2 {
        out.push(VR::compare("star_multiplicity", &instance, 1i64, series.multiplicity()));
    }
    Ok(out)
}

/// `reg(S/I)`, `depth` and `deg h` add over a disjoint union.
pub fn verify_disjoint_union_additivity(g: &Graph, h: &Graph, settings: &Settings) -> Result<Vec<VR>> {
    require_edges(g)?;
    require_edges(h)?;
    let u = graph::disjoint_union(g, h)?;
    let instance = format!("{} + {}", label(g), label(h));
    let (tg, th, tu) = (
        hochster_table(g, settings)?,
        hochster_table(h, settings)?,
        hochster_table(&u, settings)?,
    );
    use crate::betti::View::Quotient;
    Ok(vec![
        VR::compare(
            "additivity_reg",
            &instance,
            tg.regularity(Quotient) + th.regularity(Quotient),
            tu.regularity(Quotient),
        ),
        VR::compare(
            "additivity_depth",
            &instance,
            tg.pd_depth().1 + th.pd_depth().1,
            tu.pd_depth().1,
        ),
        VR::compare(
            "additivity_h_degree",
            &instance,
            hilbert(g).degree() + hilbert(h).degree(),
            hilbert(&u).degree(),
        ),
    ])
}

/// Rewrites the `instance` label of each result.
pub fn relabel(mut results: Vec<VR>, instance: &str) -> Vec<VR> {
    for r in &mut results {
        r.instance = instance.to_string();
    }
    results
}
