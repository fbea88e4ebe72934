//! Monomial ideals held as minimal generating sets, with sums, products, powers,
//! intersections and symbolic powers of squarefree ideals.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, bit, lex_cmp, mask_to_vec, vec_to_mask, Graph, VertexMask};

/// Exponent vector of a monomial in `n` variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// Squarefree monomial `prod_{i in mask} x_i`.
    pub fn from_mask(n: usize, mask: VertexMask) -> Self {
        Monomial((0..n).map(|i| (mask >> i & 1) as u32).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> VertexMask {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | bit(i))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<_>>()
            .map(Monomial)
    }

    /// Graded lexicographic comparison with `x_0 > x_1 > ...`.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

/// A monomial ideal in `n` variables given by its minimal generators, sorted graded-lex.
/// The zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    gens: Vec<Vec<u32>>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(raw: IdealJson) -> Result<Self> {
        MonomialIdeal::new(raw.n, raw.gens)
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(i: MonomialIdeal) -> Self {
        IdealJson {
            n: i.n,
            gens: i.gens.into_iter().map(|m| m.0).collect(),
        }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.gens)
    }
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::VariableMismatch(g.len(), n));
        }
        Ok(minimalize(n, gens.into_iter().map(Monomial).collect()))
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// `<x_i : i in vars>`.
    pub fn variables(n: usize, vars: VertexMask) -> Self {
        minimalize(n, mask_to_vec(vars).into_iter().map(|i| Monomial::from_mask(n, bit(i))).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let sm = m.support();
        self.gens.iter().any(|g| g.support() & !sm == 0 && g.divides(m))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        same_ring(self, other)?;
        Ok(self == other)
    }

    /// Places the ideal in a ring of `total` variables starting at variable `offset`.
    pub fn embed(&self, total: usize, offset: usize) -> Result<MonomialIdeal> {
        if offset + self.n > total {
            return Err(Error::VariableMismatch(offset + self.n, total));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; total];
                e[offset..offset + self.n].copy_from_slice(&g.0);
                Monomial(e)
            })
            .collect();
        Ok(minimalize(total, gens))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serialization")
    }
}

fn same_ring(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<()> {
    if a.n == b.n {
        Ok(())
    } else {
        Err(Error::VariableMismatch(a.n, b.n))
    }
}

/// Extracts the divisibility-minimal elements and sorts them graded-lex.
pub fn minimalize(n: usize, mut gens: Vec<Monomial>) -> MonomialIdeal {
    gens.sort_by(|a, b| a.grlex_cmp(b));
    gens.dedup();
    let mut kept: Vec<(VertexMask, Monomial)> = Vec::new();
    for m in gens {
        let sm = m.support();
        // sorted by degree, so only earlier elements can divide m
        if !kept.iter().any(|(sg, g)| sg & !sm == 0 && g.divides(&m)) {
            kept.push((sm, m));
        }
    }
    MonomialIdeal {
        n,
        gens: kept.into_iter().map(|(_, m)| m).collect(),
    }
}

pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    minimalize(
        n,
        g.edges()
            .iter()
            .map(|&(a, b)| Monomial::from_mask(n, bit(a) | bit(b)))
            .collect(),
    )
}

pub fn sum(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    same_ring(a, b)?;
    Ok(minimalize(a.n, a.gens.iter().chain(&b.gens).cloned().collect()))
}

pub fn product(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    same_ring(a, b)?;
    let mut out = Vec::with_capacity(a.gens.len() * b.gens.len());
    for x in &a.gens {
        for y in &b.gens {
            out.push(x.mul(y)?);
        }
    }
    Ok(minimalize(a.n, out))
}

/// `I^s` for `s >= 1`.
pub fn power(i: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::InvalidParameter("power needs s >= 1".into()));
    }
    let mut acc = i.clone();
    for _ in 1..s {
        acc = product(&acc, i)?;
    }
    Ok(acc)
}

/// Intersection via pairwise lcms of generators.
pub fn intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    same_ring(a, b)?;
    let mut seen = HashSet::with_capacity(a.gens.len() * b.gens.len());
    for x in &a.gens {
        for y in &b.gens {
            seen.insert(x.lcm(y));
        }
    }
    Ok(minimalize(a.n, seen.into_iter().collect()))
}

/// All monomials of degree `s` supported on `vars`, the minimal generators of `<x_i : i in C>^s`.
pub fn cover_prime_power(cover: &[usize], s: u32, n: usize) -> Result<MonomialIdeal> {
    if s == 0 || cover.is_empty() {
        return Err(Error::InvalidParameter(
            "cover_prime_power needs s >= 1 and a nonempty cover".into(),
        ));
    }
    if let Some(&v) = cover.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange(v, v, n));
    }
    Ok(prime_power_mask(vec_to_mask(cover), s, n))
}

fn prime_power_mask(cover: VertexMask, s: u32, n: usize) -> MonomialIdeal {
    fn rec(vars: &[usize], k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == vars.len() {
            cur[vars[k]] = left;
            out.push(Monomial(cur.clone()));
            cur[vars[k]] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[vars[k]] = e;
            rec(vars, k + 1, left - e, cur, out);
        }
        cur[vars[k]] = 0;
    }
    let vars = mask_to_vec(cover);
    let mut out = Vec::new();
    rec(&vars, 0, s, &mut vec![0; n], &mut out);
    minimalize(n, out)
}

/// Minimal primes of a squarefree monomial ideal, as variable masks: the minimal
/// transversals of the generator supports. Sorted by size, then lexicographically.
pub fn minimal_primes(i: &MonomialIdeal) -> Result<Vec<VertexMask>> {
    if !i.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut trans: Vec<VertexMask> = vec![0];
    for g in &i.gens {
        let e = g.support();
        let mut next = Vec::new();
        for &t in &trans {
            if t & e != 0 {
                next.push(t);
            } else {
                next.extend(mask_to_vec(e).into_iter().map(|v| t | bit(v)));
            }
        }
        next.sort_unstable_by_key(|m| (m.count_ones(), *m));
        next.dedup();
        let mut minimal: Vec<VertexMask> = Vec::new();
        for t in next {
            if !minimal.iter().any(|&m| m & !t == 0) {
                minimal.push(t);
            }
        }
        trans = minimal;
    }
    sort_primes(&mut trans);
    Ok(trans)
}

fn sort_primes(primes: &mut [VertexMask]) {
    primes.sort_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp(a, b)));
}

/// `I^(s)`: intersection of `p^s` over the minimal primes of a squarefree ideal.
pub fn symbolic_power_of(i: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    let primes = minimal_primes(i)?;
    intersect_prime_powers(&primes, s, i.n)
}

fn intersect_prime_powers(primes: &[VertexMask], s: u32, n: usize) -> Result<MonomialIdeal> {
    if s == 0 {
        return Err(Error::InvalidParameter("symbolic power needs s >= 1".into()));
    }
    let mut iter = primes.iter();
    let first = iter.next().ok_or(Error::ZeroIdeal)?;
    let mut acc = prime_power_mask(*first, s, n);
    for &p in iter {
        acc = intersect(&acc, &prime_power_mask(p, s, n))?;
    }
    Ok(acc)
}

/// `I(G)^(s)` by intersecting powers of the minimal-cover primes.
pub fn symbolic_power(g: &Graph, s: u32) -> Result<MonomialIdeal> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let mut covers = graph::minimal_vertex_covers(g).masks();
    sort_primes(&mut covers);
    intersect_prime_powers(&covers, s, g.n())
}

/// True when `m` has weight at least `s` on every cover.
pub fn in_symbolic_power(covers: &[VertexMask], m: &Monomial, s: u32) -> bool {
    covers.iter().all(|&c| {
        mask_to_vec(c)
            .into_iter()
            .map(|i| m.0[i])
            .sum::<u32>()
            >= s
    })
}

/// `I(G)^(s)` by sweeping every exponent vector in `{0..s}^n` and keeping the
/// minimal members. Independent of [`symbolic_power`]; cost `(s+1)^n`.
pub fn symbolic_power_enumerated(g: &Graph, s: u32) -> Result<MonomialIdeal> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    if s == 0 {
        return Err(Error::InvalidParameter("symbolic power needs s >= 1".into()));
    }
    let n = g.n();
    let covers = graph::minimal_vertex_covers(g).masks();
    let mut gens = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        let m = Monomial(e.clone());
        if in_symbolic_power(&covers, &m, s) {
            let minimal = (0..n).filter(|&i| e[i] > 0).all(|i| {
                let mut d = e.clone();
                d[i] -= 1;
                !in_symbolic_power(&covers, &Monomial(d), s)
            });
            if minimal {
                gens.push(m);
            }
        }
        // mixed-radix increment
        let mut k = 0;
        loop {
            if k == n {
                return Ok(minimalize(n, gens));
            }
            if e[k] < s {
                e[k] += 1;
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, staircase};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn gens_of(i: &MonomialIdeal) -> Vec<Vec<u32>> {
        i.gens().iter().map(|m| m.exponents().to_vec()).collect()
    }

    #[test]
    fn edge_ideals() {
        assert_eq!(gens_of(&edge_ideal(&complete(2).unwrap())), vec![vec![1, 1]]);
        assert_eq!(
            gens_of(&edge_ideal(&path(3).unwrap())),
            vec![vec![1, 1, 0], vec![0, 1, 1]]
        );
        for n in 1..6 {
            assert_eq!(edge_ideal(&staircase(n).unwrap()).mu(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn minimalize_and_membership() {
        let i = ideal(2, &[&[2, 0], &[2, 1], &[1, 1]]);
        assert_eq!(gens_of(&i), vec![vec![2, 0], vec![1, 1]]);
        let xy = ideal(2, &[&[1, 1]]);
        assert!(xy.contains(&Monomial::new(vec![2, 3])));
        assert!(!xy.contains(&Monomial::new(vec![0, 3])));
        assert!(MonomialIdeal::new(3, vec![vec![1, 1]]).is_err());
        assert!(xy.equals(&MonomialIdeal::zero(3)).is_err());
    }

    #[test]
    fn sums_products_powers() {
        assert_eq!(gens_of(&power(&ideal(2, &[&[1, 1]]), 3).unwrap()), vec![vec![3, 3]]);
        let p3 = edge_ideal(&path(3).unwrap());
        assert_eq!(
            gens_of(&power(&p3, 2).unwrap()),
            vec![vec![2, 2, 0], vec![1, 2, 1], vec![0, 2, 2]]
        );
        let a = ideal(4, &[&[1, 1, 0, 0]]);
        let b = ideal(4, &[&[0, 0, 1, 1]]);
        assert_eq!(sum(&a, &b).unwrap().mu(), 2);
        assert!(power(&a, 0).is_err());
    }

    #[test]
    fn intersections() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(gens_of(&intersect(&x, &y).unwrap()), vec![vec![1, 1]]);
        // (x_1^2) ∩ (x_0, x_2)^2
        let a = ideal(3, &[&[0, 2, 0]]);
        let b = cover_prime_power(&[0, 2], 2, 3).unwrap();
        assert_eq!(
            gens_of(&intersect(&a, &b).unwrap()),
            vec![vec![2, 2, 0], vec![1, 2, 1], vec![0, 2, 2]]
        );
    }

    #[test]
    fn intersection_matches_membership_oracle() {
        let a = ideal(2, &[&[2, 0], &[0, 2]]);
        let b = ideal(2, &[&[1, 0]]);
        let c = intersect(&a, &b).unwrap();
        for i in 0..=4 {
            for j in 0..=4 - i {
                let m = Monomial::new(vec![i, j]);
                assert_eq!(c.contains(&m), a.contains(&m) && b.contains(&m), "{m:?}");
            }
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(gens_of(&cover_prime_power(&[0], 3, 2).unwrap()), vec![vec![3, 0]]);
        assert_eq!(
            gens_of(&cover_prime_power(&[0, 1], 2, 2).unwrap()),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(cover_prime_power(&[0, 1, 2], 2, 3).unwrap().mu(), 6);
        assert!(cover_prime_power(&[], 2, 3).is_err());
    }

    #[test]
    fn symbolic_examples() {
        let k2 = complete(2).unwrap();
        assert_eq!(gens_of(&symbolic_power(&k2, 2).unwrap()), vec![vec![2, 2]]);
        let k3 = complete(3).unwrap();
        let expected = sum(
            &power(&edge_ideal(&k3), 2).unwrap(),
            &ideal(3, &[&[1, 1, 1]]),
        )
        .unwrap();
        assert_eq!(symbolic_power(&k3, 2).unwrap(), expected);
        assert_eq!(symbolic_power_enumerated(&k3, 2).unwrap(), expected);
        let p3 = path(3).unwrap();
        assert_eq!(
            symbolic_power(&p3, 2).unwrap(),
            power(&edge_ideal(&p3), 2).unwrap()
        );
        assert_eq!(symbolic_power(&crate::graph::edgeless(3).unwrap(), 2), Err(Error::Edgeless));
    }

    #[test]
    fn symbolic_routes_agree_on_cycles() {
        for n in 3..=6 {
            let g = cycle(n).unwrap();
            for s in 1..=3 {
                assert_eq!(
                    symbolic_power(&g, s).unwrap(),
                    symbolic_power_enumerated(&g, s).unwrap(),
                    "C_{n}, s={s}"
                );
            }
        }
    }

    #[test]
    fn minimal_primes_of_squarefree_ideals() {
        let p3 = edge_ideal(&path(3).unwrap());
        assert_eq!(minimal_primes(&p3).unwrap(), vec![0b010, 0b101]);
        let with_var = ideal(3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(minimal_primes(&with_var).unwrap(), vec![0b101, 0b110]);
        assert_eq!(minimal_primes(&ideal(2, &[&[2, 0]])), Err(Error::NotSquarefree));
    }

    #[test]
    fn json_is_grlex_sorted() {
        let i = ideal(3, &[&[0, 1, 1], &[1, 1, 0], &[2, 0, 0]]);
        assert_eq!(i.to_json(), r#"{"n":3,"gens":[[2,0,0],[1,1,0],[0,1,1]]}"#);
    }
}
