//! Simplicial complexes given by facets, f-vectors and exact reduced homology.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, bit, full_mask, lex_cmp, mask_to_vec, vec_to_mask, Graph, VertexMask};
use crate::linalg::{self, SparseMatrix};

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldTag {
    Rationals,
    Prime(u64),
}

impl FieldTag {
    pub const Q: FieldTag = FieldTag::Rationals;
    pub const F2: FieldTag = FieldTag::Prime(2);

    /// Checks primality; primes are limited to `p < 2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if linalg::is_prime(p) && p < (1 << 31) {
            Ok(FieldTag::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn rank(&self, m: &SparseMatrix) -> usize {
        match *self {
            FieldTag::Rationals => linalg::rank_rational(m),
            FieldTag::Prime(p) => linalg::rank_mod_p(m, p),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => write!(f, "Q"),
            FieldTag::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl From<FieldTag> for String {
    fn from(t: FieldTag) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for FieldTag {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        match s.as_str() {
            "Q" | "q" => Ok(FieldTag::Rationals),
            _ => {
                let digits = s.trim_start_matches(['F', 'f']);
                let p = digits
                    .parse::<u64>()
                    .map_err(|_| Error::Malformed(format!("unknown field {s}")))?;
                FieldTag::prime(p)
            }
        }
    }
}

/// Ranks of reduced homology, `ranks[k]` being `H~_{k-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct HomologyProfile {
    ranks: Vec<u64>,
}

impl HomologyProfile {
    pub(crate) fn from_offset(mut ranks: Vec<u64>) -> Self {
        while ranks.last() == Some(&0) {
            ranks.pop();
        }
        HomologyProfile { ranks }
    }

    /// Rank of `H~_l` for `l >= -1`.
    pub fn get(&self, l: isize) -> u64 {
        usize::try_from(l + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    /// Nonzero `(l, rank)` pairs.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, u64)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != 0)
            .map(|(k, &r)| (k as isize - 1, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `sum_l (-1)^l rank H~_l`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(l, r)| if l.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Ranks indexed from `l = -1`, trailing zeros trimmed.
    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    /// Homology of the simplicial join, by Künneth over a field:
    /// `H~_{r+1}(X * Y) = sum_{i+j=r} H~_i(X) H~_j(Y)`.
    pub(crate) fn join(&self, other: &Self) -> Self {
        if self.ranks.is_empty() || other.ranks.is_empty() {
            return HomologyProfile::default();
        }
        let mut out = vec![0u64; self.ranks.len() + other.ranks.len() - 1];
        for (a, &x) in self.ranks.iter().enumerate() {
            for (b, &y) in other.ranks.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        HomologyProfile::from_offset(out)
    }

    /// Homology of the disjoint union of complexes that each have a vertex.
    pub(crate) fn disjoint_union(parts: &[HomologyProfile]) -> Self {
        let len = parts.iter().map(|p| p.ranks.len()).max().unwrap_or(0).max(2);
        let mut out = vec![0u64; len];
        for p in parts {
            for (k, &r) in p.ranks.iter().enumerate() {
                out[k] += r;
            }
        }
        out[1] += parts.len().saturating_sub(1) as u64;
        HomologyProfile::from_offset(out)
    }
}

/// A simplicial complex on `0..n` stored by its facets.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ComplexJson", into = "ComplexJson")]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexMask>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(raw: ComplexJson) -> Result<Self> {
        SimplicialComplex::new(raw.n, &raw.facets)
    }
}

impl From<SimplicialComplex> for ComplexJson {
    fn from(c: SimplicialComplex) -> Self {
        ComplexJson {
            n: c.n,
            facets: c.facets(),
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets={:?})", self.n, self.facets())
    }
}

impl SimplicialComplex {
    /// Builds a complex from generating faces, keeping only the maximal ones.
    /// An empty list is the void complex; `[[]]` is the complex `{∅}`.
    pub fn new(n: usize, faces: &[Vec<usize>]) -> Result<Self> {
        if n > graph::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: n,
                max: graph::MAX_VERTICES,
            });
        }
        if let Some(&v) = faces.iter().flatten().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange(v, v, n));
        }
        Ok(Self::from_masks(n, faces.iter().map(|f| vec_to_mask(f)).collect()))
    }

    pub(crate) fn from_masks(n: usize, mut faces: Vec<VertexMask>) -> Self {
        // larger faces first so every face is compared only with kept supersets
        faces.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<VertexMask> = Vec::new();
        for f in faces {
            if !facets.iter().any(|&g| f & !g == 0) {
                facets.push(f);
            }
        }
        facets.sort_by(|&a, &b| lex_cmp(a, b));
        SimplicialComplex { n, facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| mask_to_vec(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `max |F| - 1`; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    /// All faces, sorted by size then by vertex list.
    pub fn faces(&self) -> Vec<VertexMask> {
        let mut all = Vec::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                all.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        sort_faces(&mut all);
        all
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let m = vec_to_mask(face);
        self.facets.iter().any(|&f| m & !f == 0)
    }

    /// Induced subcomplex on `a`: faces of `self` contained in `a`.
    pub fn restrict(&self, a: &[usize]) -> SimplicialComplex {
        self.restrict_mask(vec_to_mask(a))
    }

    pub(crate) fn restrict_mask(&self, a: VertexMask) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        Self::from_masks(self.n, self.facets.iter().map(|&f| f & a).collect())
    }

    /// `(f_{-1}, f_0, ..., f_dim)`.
    pub fn f_vector(&self) -> Vec<u64> {
        f_vector_of_faces(&self.faces())
    }

    /// True when some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty() && self.facets.iter().fold(full_mask(self.n), |acc, &f| acc & f) != 0
    }

    pub fn reduced_homology_ranks(&self, field: FieldTag) -> Result<HomologyProfile> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        Ok(reduced_homology_of_faces(&self.faces(), field))
    }
}

/// Complex of independent sets of `g`; its Stanley–Reisner ideal is `I(g)`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let mut facets = graph::maximal_independent_sets(g);
    facets.sort_by(|&a, &b| lex_cmp(a, b));
    SimplicialComplex { n: g.n(), facets }
}

pub(crate) fn sort_faces(faces: &mut Vec<VertexMask>) {
    faces.sort_unstable_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp(a, b)));
    faces.dedup();
}

pub(crate) fn f_vector_of_faces(faces: &[VertexMask]) -> Vec<u64> {
    let top = faces.iter().map(|f| f.count_ones() as usize).max();
    let Some(top) = top else { return Vec::new() };
    let mut fv = vec![0u64; top + 1];
    for f in faces {
        fv[f.count_ones() as usize] += 1;
    }
    fv
}

/// Reduced homology of a downward-closed, nonempty family of faces
/// (the augmented chain complex, with `∅` in degree -1).
pub(crate) fn reduced_homology_of_faces(faces: &[VertexMask], field: FieldTag) -> HomologyProfile {
    let mut levels: Vec<Vec<VertexMask>> = Vec::new();
    for &f in faces {
        let k = f.count_ones() as usize;
        if levels.len() <= k {
            levels.resize(k + 1, Vec::new());
        }
        levels[k].push(f);
    }
    for l in &mut levels {
        l.sort_unstable();
        l.dedup();
    }
    // rank of boundary from size-k faces to size-(k-1) faces
    let mut bd_rank = vec![0usize; levels.len() + 1];
    for k in 1..levels.len() {
        let lower = &levels[k - 1];
        let mut m = SparseMatrix::new(lower.len());
        for &f in &levels[k] {
            let mut row = Vec::with_capacity(k);
            for (t, v) in mask_to_vec(f).into_iter().enumerate() {
                let sub = f & !bit(v);
                let col = lower.binary_search(&sub).expect("face family not closed");
                row.push((col, if t % 2 == 0 { 1 } else { -1 }));
            }
            m.rows.push(row);
        }
        bd_rank[k] = field.rank(&m);
    }
    let ranks = (0..levels.len())
        .map(|k| (levels[k].len() - bd_rank[k] - bd_rank[k + 1]) as u64)
        .collect();
    HomologyProfile::from_offset(ranks)
}
