//! Graded Betti numbers of `S/I` by two independent routes.
//!
//! * Hochster's formula for squarefree ideals: `β_{i,A}(S/I) = dim H~_{|A|-i-1}(Δ_A)`,
//!   summed over vertex subsets `A`. For edge ideals `Δ_A` is the independence complex
//!   of `G[A]`; when `G[A]` is disconnected it is a simplicial join, and when the
//!   complement of `G[A]` is disconnected it is a disjoint union, so the homology of
//!   most restrictions is assembled from smaller, memoized pieces.
//! * Upper-Koszul complexes over the lcm lattice for arbitrary monomial ideals:
//!   `β_{i,a}(I) = dim H~_{i-1}(K^a(I))`, where `K^a` is the complex of squarefree
//!   `σ ≤ a` with `x^{a-σ} ∈ I`.
//!
//! Tables are always stored for the quotient `S/I`, so `β_{0,0} = 1`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::complex::{reduced_homology_of_faces, FieldTag, HomologyProfile, SimplicialComplex};
use crate::cost::CostGate;
use crate::error::{Error, Result};
use crate::graph::{self, bit, components_within, Graph, VertexMask};
use crate::hilbert::Poly;
use crate::ideal::{Monomial, MonomialIdeal};

/// Whether a regularity refers to the ideal `I` or the quotient `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum View {
    Ideal,
    Quotient,
}

/// Betti numbers of `S/I` totalized by degree: `(i, j) -> β_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBetti {
    pub n: usize,
    pub field: FieldTag,
    entries: BTreeMap<(usize, usize), u64>,
}

impl Serialize for GradedBetti {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            rank: u64,
        }
        let mut seq = ser.serialize_seq(Some(self.entries.len()))?;
        for (&(i, j), &rank) in &self.entries {
            seq.serialize_element(&Entry { i, j, rank })?;
        }
        seq.end()
    }
}

impl GradedBetti {
    fn empty(n: usize, field: FieldTag) -> Self {
        GradedBetti {
            n,
            field,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, i: usize, j: usize, r: u64) {
        if r > 0 {
            *self.entries.entry((i, j)).or_insert(0) += r;
        }
    }

    fn merge(mut self, other: GradedBetti) -> Self {
        for ((i, j), r) in other.entries {
            self.add(i, j, r);
        }
        self
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero `(i, j, β_{i,j})` sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r))
    }

    /// `max (j - i)` over nonzero entries, shifted by one for the ideal.
    pub fn regularity(&self, of: View) -> i64 {
        let reg = self
            .entries()
            .map(|(i, j, _)| j as i64 - i as i64)
            .max()
            .unwrap_or(0);
        match of {
            View::Quotient => reg,
            View::Ideal => reg + 1,
        }
    }

    /// Projective dimension of `S/I` and its depth `n - pd`.
    pub fn pd_depth(&self) -> (usize, usize) {
        let pd = self.entries().map(|(i, _, _)| i).max().unwrap_or(0);
        (pd, self.n - pd)
    }

    /// True when all `β_{i,j}`, `i >= 1`, lie on a single diagonal `j - i = const`.
    pub fn has_linear_resolution(&self) -> bool {
        let mut diags = self.entries().filter(|&(i, _, _)| i >= 1).map(|(i, j, _)| j - i);
        match diags.next() {
            None => true,
            Some(d) => diags.all(|x| x == d),
        }
    }

    /// `sum (-1)^i β_{i,j} t^j`, which equals `h(t) (1-t)^{n-d}`.
    pub fn k_polynomial(&self) -> Poly {
        let top = self.entries().map(|(_, j, _)| j).max().unwrap_or(0);
        let mut c = vec![0i64; top + 1];
        for (i, j, r) in self.entries() {
            c[j] += if i % 2 == 0 { r as i64 } else { -(r as i64) };
        }
        Poly::new(c)
    }
}

/// Multigraded Betti numbers of `S/I`: `(i, a) -> β_{i,a}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub field: FieldTag,
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.graded().serialize(ser)
    }
}

impl BettiTable {
    fn empty(n: usize, field: FieldTag) -> Self {
        BettiTable {
            n,
            field,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, i: usize, a: Monomial, r: u64) {
        if r > 0 {
            *self.entries.entry((i, a)).or_insert(0) += r;
        }
    }

    pub fn get(&self, i: usize, a: &Monomial) -> u64 {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> + '_ {
        self.entries.iter().map(|((i, a), &r)| (*i, a, r))
    }

    pub fn graded(&self) -> GradedBetti {
        let mut g = GradedBetti::empty(self.n, self.field);
        for (i, a, r) in self.entries() {
            g.add(i, a.degree() as usize, r);
        }
        g
    }

    pub fn regularity(&self, of: View) -> i64 {
        self.graded().regularity(of)
    }

    pub fn pd_depth(&self) -> (usize, usize) {
        self.graded().pd_depth()
    }
}

/// Free-function forms of the table accessors.
pub fn regularity(t: &GradedBetti, of: View) -> i64 {
    t.regularity(of)
}

pub fn pd_depth(t: &GradedBetti) -> (usize, usize) {
    t.pd_depth()
}

// ---------------------------------------------------------------------------
// Hochster route for edge ideals

/// Homology of independence complexes of induced subgraphs, memoized by vertex set.
struct IndependenceHomology<'g> {
    g: &'g Graph,
    coadj: Vec<VertexMask>,
    field: FieldTag,
    memo: HashMap<VertexMask, HomologyProfile>,
}

impl<'g> IndependenceHomology<'g> {
    fn new(g: &'g Graph, field: FieldTag) -> Self {
        let all = g.vertex_mask();
        let coadj = (0..g.n()).map(|v| all & !g.neighbors(v) & !bit(v)).collect();
        IndependenceHomology {
            g,
            coadj,
            field,
            memo: HashMap::new(),
        }
    }

    fn sub(&mut self, a: VertexMask) -> HomologyProfile {
        if let Some(p) = self.memo.get(&a) {
            return p.clone();
        }
        let p = self.profile(a);
        self.memo.insert(a, p.clone());
        p
    }

    /// `H~(Ind(G[a]))`.
    fn profile(&mut self, a: VertexMask) -> HomologyProfile {
        if a == 0 {
            return HomologyProfile::from_offset(vec![1]);
        }
        let adj = self.g.adjacency();
        // an isolated vertex of G[a] is a cone point of the complex
        if graph::mask_to_vec(a).into_iter().any(|v| adj[v] & a == 0) {
            return HomologyProfile::default();
        }
        let comps = components_within(adj, a);
        if comps.len() > 1 {
            let mut acc = HomologyProfile::from_offset(vec![1]);
            for c in comps {
                acc = acc.join(&self.sub(c));
                if acc.is_acyclic() {
                    break;
                }
            }
            return acc;
        }
        let cocomps = components_within(&self.coadj, a);
        if cocomps.len() > 1 {
            let parts: Vec<_> = cocomps.into_iter().map(|c| self.sub(c)).collect();
            return HomologyProfile::disjoint_union(&parts);
        }
        let faces = graph::independent_sets_within(self.g, a);
        reduced_homology_of_faces(&faces, self.field)
    }
}

fn subset_chunks(n: usize) -> Vec<(u64, u64)> {
    let total: u64 = 1u64 << n;
    let chunk = (total / 64).max(1 << 12).min(total);
    (0..total.div_ceil(chunk))
        .map(|k| (k * chunk, ((k + 1) * chunk).min(total)))
        .collect()
}

fn check_hochster_size(n: usize) -> Result<()> {
    if n >= 63 {
        Err(Error::TooManyVertices { got: n, max: 62 })
    } else {
        Ok(())
    }
}

/// Multigraded Betti table of `S/I(G)` by Hochster's formula.
pub fn betti_hochster(g: &Graph, field: FieldTag) -> BettiTable {
    betti_hochster_gated(g, field, &CostGate::unlimited()).expect("unlimited gate")
}

pub fn betti_hochster_gated(g: &Graph, field: FieldTag, gate: &CostGate) -> Result<BettiTable> {
    check_hochster_size(g.n())?;
    gate.check_hochster(g.n())?;
    let n = g.n();
    let parts: Vec<Vec<(usize, VertexMask, u64)>> = subset_chunks(n)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut hom = IndependenceHomology::new(g, field);
            let mut out = Vec::new();
            for a in lo..hi {
                let p = hom.profile(a);
                let size = a.count_ones() as isize;
                for (l, r) in p.nonzero() {
                    out.push(((size - 1 - l) as usize, a, r));
                }
            }
            out
        })
        .collect();
    let mut t = BettiTable::empty(n, field);
    for (i, a, r) in parts.into_iter().flatten() {
        t.add(i, Monomial::from_mask(n, a), r);
    }
    Ok(t)
}

/// Graded Betti table of `S/I(G)` by Hochster's formula, without storing multidegrees.
pub fn graded_betti_hochster(g: &Graph, field: FieldTag, gate: &CostGate) -> Result<GradedBetti> {
    check_hochster_size(g.n())?;
    gate.check_hochster(g.n())?;
    let n = g.n();
    Ok(subset_chunks(n)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut hom = IndependenceHomology::new(g, field);
            let mut t = GradedBetti::empty(n, field);
            for a in lo..hi {
                let size = a.count_ones() as usize;
                for (l, r) in hom.profile(a).nonzero() {
                    t.add((size as isize - 1 - l) as usize, size, r);
                }
            }
            t
        })
        .reduce(|| GradedBetti::empty(n, field), GradedBetti::merge))
}

/// Hochster's formula applied literally to a squarefree ideal: for every subset `A`,
/// the faces of the Stanley–Reisner complex inside `A` are enumerated and their
/// homology computed from boundary matrices. No decomposition shortcuts.
pub fn betti_hochster_squarefree(ideal: &MonomialIdeal, field: FieldTag) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.n();
    check_hochster_size(n)?;
    let nonfaces: Vec<VertexMask> = ideal.gens().iter().map(Monomial::support).collect();
    let is_face = |f: VertexMask| !nonfaces.iter().any(|&s| s & !f == 0);
    let mut t = BettiTable::empty(n, field);
    for a in 0..(1u64 << n) {
        let mut faces = Vec::new();
        let mut sub = a;
        loop {
            if is_face(sub) {
                faces.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & a;
        }
        if faces.is_empty() {
            // the unit ideal: the void complex contributes nothing
            continue;
        }
        let size = a.count_ones() as isize;
        for (l, r) in reduced_homology_of_faces(&faces, field).nonzero() {
            t.add((size - 1 - l) as usize, Monomial::from_mask(n, a), r);
        }
    }
    Ok(t)
}

// ---------------------------------------------------------------------------
// Upper-Koszul route for arbitrary monomial ideals

/// The lcm lattice: lcms of all nonempty subsets of the minimal generators,
/// sorted graded-lex.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let gens = ideal.gens();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut queue: VecDeque<Monomial> = gens.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let l = x.lcm(g);
            if !seen.contains(&l) {
                seen.insert(l.clone());
                queue.push_back(l);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| a.grlex_cmp(b));
    out
}

/// Facets of the upper-Koszul complex `K^a(I)`: for each generator `g | a`, the
/// set `{i : g_i < a_i}` bounds the squarefree `σ` with `g | x^{a-σ}`.
fn koszul_complex(gens: &[(VertexMask, Monomial)], a: &Monomial) -> SimplicialComplex {
    let n = a.n();
    let sa = a.support();
    let mut facets = Vec::new();
    for (sg, g) in gens {
        if sg & !sa == 0 && g.divides(a) {
            let room = g
                .exponents()
                .iter()
                .zip(a.exponents())
                .enumerate()
                .filter(|(_, (&gi, &ai))| gi < ai)
                .fold(0u64, |m, (i, _)| m | bit(i));
            facets.push(room);
        }
    }
    SimplicialComplex::from_masks(n, facets)
}

/// `K^a(I)` as a complex on the variables, for inspection.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> SimplicialComplex {
    let gens: Vec<_> = ideal.gens().iter().map(|g| (g.support(), g.clone())).collect();
    koszul_complex(&gens, a)
}

/// Multigraded Betti table of `S/I` from upper-Koszul complexes on the lcm lattice.
pub fn betti_koszul(ideal: &MonomialIdeal, field: FieldTag) -> Result<BettiTable> {
    betti_koszul_gated(ideal, field, &CostGate::unlimited())
}

pub fn betti_koszul_gated(ideal: &MonomialIdeal, field: FieldTag, gate: &CostGate) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.n();
    gate.check_koszul_box(ideal)?;
    let lattice = lcm_lattice(ideal);
    gate.check_koszul_lattice(lattice.len(), n)?;
    let gens: Vec<_> = ideal.gens().iter().map(|g| (g.support(), g.clone())).collect();
    let found: Vec<(usize, Monomial, u64)> = lattice
        .par_iter()
        .flat_map_iter(|a| {
            let k = koszul_complex(&gens, a);
            let mut out = Vec::new();
            if !k.is_cone() {
                let faces = k.faces();
                for (l, r) in reduced_homology_of_faces(&faces, field).nonzero() {
                    // β_{l+1,a}(I) = β_{l+2,a}(S/I)
                    out.push(((l + 2) as usize, a.clone(), r));
                }
            }
            out
        })
        .collect();
    let mut t = BettiTable::empty(n, field);
    t.add(0, Monomial::one(n), 1);
    for (i, a, r) in found {
        t.add(i, a, r);
    }
    Ok(t)
}

/// Regularity of a monomial ideal (ideal view) through the upper-Koszul route.
pub fn ideal_regularity(ideal: &MonomialIdeal, field: FieldTag, gate: &CostGate) -> Result<i64> {
    Ok(betti_koszul_gated(ideal, field, gate)?.regularity(View::Ideal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, whiskered_complete};
    use crate::ideal::{edge_ideal, power, symbolic_power, MonomialIdeal};

    fn graded(g: &Graph) -> GradedBetti {
        betti_hochster(g, FieldTag::Q).graded()
    }

    #[test]
    fn single_edge() {
        let t = graded(&complete(2).unwrap());
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 2, 1)]);
        assert_eq!(t.regularity(View::Ideal), 2);
        assert_eq!(t.regularity(View::Quotient), 1);
        let k = betti_koszul(&edge_ideal(&complete(2).unwrap()), FieldTag::Q).unwrap();
        assert_eq!(k, betti_hochster(&complete(2).unwrap(), FieldTag::Q));
    }

    #[test]
    fn pentagon() {
        let g = cycle(5).unwrap();
        let t = betti_hochster(&g, FieldTag::Q);
        let full = Monomial::from_mask(5, 0b11111);
        assert_eq!(t.get(3, &full), 1);
        assert_eq!(t.regularity(View::Quotient), 2);
    }

    #[test]
    fn whiskered_is_linear() {
        let t = graded(&whiskered_complete(5, 3).unwrap());
        assert!(t.has_linear_resolution());
        assert!(t.entries().all(|(i, j, _)| i == 0 || j == i + 1));
        assert_eq!(t.pd_depth(), (5, 3));
    }

    #[test]
    fn paths() {
        assert_eq!(graded(&path(6).unwrap()).regularity(View::Quotient), 2);
        assert_eq!(graded(&complete(4).unwrap()).pd_depth().1, 1);
    }

    #[test]
    fn artinian_square() {
        let i = MonomialIdeal::new(2, vec![vec![2, 0], vec![0, 2]]).unwrap();
        let t = betti_koszul(&i, FieldTag::Q).unwrap();
        assert_eq!(t.get(2, &Monomial::new(vec![2, 2])), 1);
        assert_eq!(t.regularity(View::Ideal), 3);
    }

    #[test]
    fn symbolic_square_of_pentagon() {
        let i = symbolic_power(&cycle(5).unwrap(), 2).unwrap();
        assert_eq!(ideal_regularity(&i, FieldTag::Q, &CostGate::default()).unwrap(), 4);
    }

    #[test]
    fn lattice_of_three_variables() {
        let i = MonomialIdeal::variables(3, 0b111);
        assert_eq!(lcm_lattice(&i).len(), 7);
        let t = betti_koszul(&i, FieldTag::F2).unwrap().graded();
        // Koszul complex on three variables
        assert_eq!(
            t.entries().collect::<Vec<_>>(),
            vec![(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)]
        );
    }

    #[test]
    fn direct_and_decomposed_hochster_agree() {
        for g in [cycle(6).unwrap(), path(5).unwrap(), whiskered_complete(3, 2).unwrap()] {
            for f in [FieldTag::Q, FieldTag::F2] {
                assert_eq!(
                    betti_hochster(&g, f),
                    betti_hochster_squarefree(&edge_ideal(&g), f).unwrap(),
                );
            }
        }
    }

    #[test]
    fn k_polynomial_of_power() {
        // I = (x^2): resolution 0 -> S(-2) -> S
        let i = power(&MonomialIdeal::variables(1, 1), 2).unwrap();
        let t = betti_koszul(&i, FieldTag::Q).unwrap().graded();
        assert_eq!(t.k_polynomial().coeffs(), &[1, 0, -1]);
    }

    #[test]
    fn zero_ideal_rejected() {
        assert_eq!(
            betti_koszul(&MonomialIdeal::zero(2), FieldTag::Q),
            Err(Error::ZeroIdeal)
        );
    }
}
