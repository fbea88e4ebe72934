//! Finite simple graphs on vertices `0..n`, the named families, the binary
//! constructions (join, disjoint union, complement) and vertex-cover enumeration.
//!
//! Vertex sets are carried internally as `u64` bitmasks, which caps graphs at
//! [`MAX_VERTICES`] vertices. Every invariant computed downstream is exponential
//! in `n` anyway.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Bitmask of vertices.
pub type VertexMask = u64;

#[inline]
pub(crate) fn bit(v: usize) -> VertexMask {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> VertexMask {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertices of a mask in increasing order.
pub fn mask_to_vec(mut mask: VertexMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

pub fn vec_to_mask(vs: &[usize]) -> VertexMask {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

/// Compares two masks by their sorted vertex lists.
pub(crate) fn lex_cmp(a: VertexMask, b: VertexMask) -> std::cmp::Ordering {
    mask_to_vec(a).cmp(&mask_to_vec(b))
}

/// A finite simple graph. Edges are stored sorted with `i < j`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexMask>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(raw: GraphJson) -> Result<Self> {
        let pairs: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(raw.n, &pairs)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Validates and canonicalizes an edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        let mut canon = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange(a, b, n));
            }
            if adj[a] & bit(b) != 0 {
                return Err(Error::DuplicateEdge(a, b));
            }
            adj[a] |= bit(b);
            adj[b] |= bit(a);
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        Ok(Graph {
            n,
            edges: canon,
            adj,
        })
    }

    fn from_adjacency(adj: Vec<VertexMask>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (i, &a) in adj.iter().enumerate() {
            for j in mask_to_vec(a & !full_mask(i + 1)) {
                edges.push((i, j));
            }
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & bit(b) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> VertexMask {
        self.adj[v]
    }

    pub(crate) fn adjacency(&self) -> &[VertexMask] {
        &self.adj
    }

    pub fn vertex_mask(&self) -> VertexMask {
        full_mask(self.n)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// True when no two vertices of `mask` are adjacent.
    pub fn is_independent(&self, mask: VertexMask) -> bool {
        mask_to_vec(mask).into_iter().all(|v| self.adj[v] & mask == 0)
    }

    /// True when every edge has an endpoint in `mask`.
    pub fn is_vertex_cover(&self, mask: VertexMask) -> bool {
        self.is_independent(self.vertex_mask() & !mask)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Families

pub fn edgeless(n: usize) -> Result<Graph> {
    Graph::new(n, &[])
}

/// The path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    positive("path", n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    positive("complete", n)?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::new(n, &edges)
}

/// Complete multipartite graph with the given part sizes, parts labeled consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidParameter(
            "complete_multipartite needs positive part sizes".into(),
        ));
    }
    parts.iter().try_fold(edgeless(0)?, |acc, &p| join(&acc, &edgeless(p)?))
}

/// `K_{1,s}` with the center at vertex 0.
pub fn star(s: usize) -> Result<Graph> {
    positive("star", s)?;
    let edges: Vec<_> = (1..=s).map(|i| (0, i)).collect();
    Graph::new(s + 1, &edges)
}

/// Join of a single apex (vertex 0) and the cycle on `n` vertices.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("wheel needs n >= 4, got {n}")));
    }
    join(&edgeless(1)?, &cycle(n)?)
}

/// `K_n` on `0..n` with pendant vertices `n + i` attached to `i` for `i < r`.
pub fn whiskered_complete(n: usize, r: usize) -> Result<Graph> {
    if r < 1 || r > n {
        return Err(Error::InvalidParameter(format!(
            "whiskered_complete needs 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    let mut edges = complete(n)?.edges;
    edges.extend((0..r).map(|i| (i, n + i)));
    Graph::new(n + r, &edges)
}

/// Bipartite staircase: `x_i = i`, `y_j = n + j`, edges `{x_i, y_j}` for `i <= j`.
pub fn staircase(n: usize) -> Result<Graph> {
    positive("staircase", n)?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i..n {
            edges.push((i, n + j));
        }
    }
    Graph::new(2 * n, &edges)
}

fn positive(name: &str, n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{name} needs a positive size")))
    } else {
        Ok(())
    }
}

/// Named graph families, used by the command line and the verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteMultipartite { parts: Vec<usize> },
    Star { s: usize },
    Wheel { n: usize },
    WhiskeredComplete { n: usize, r: usize },
    Staircase { n: usize },
    Edgeless { n: usize },
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Path { n } => path(*n),
            Family::Cycle { n } => cycle(*n),
            Family::Complete { n } => complete(*n),
            Family::CompleteMultipartite { parts } => complete_multipartite(parts),
            Family::Star { s } => star(*s),
            Family::Wheel { n } => wheel(*n),
            Family::WhiskeredComplete { n, r } => whiskered_complete(*n, *r),
            Family::Staircase { n } => staircase(*n),
            Family::Edgeless { n } => edgeless(*n),
        }
    }

    /// Parses `name p1 p2 ...` as accepted by `gen`.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        Ok(match name {
            "path" => {
                want(1)?;
                Family::Path { n: params[0] }
            }
            "cycle" => {
                want(1)?;
                Family::Cycle { n: params[0] }
            }
            "complete" => {
                want(1)?;
                Family::Complete { n: params[0] }
            }
            "complete_multipartite" => Family::CompleteMultipartite {
                parts: params.to_vec(),
            },
            "star" => {
                want(1)?;
                Family::Star { s: params[0] }
            }
            "wheel" => {
                want(1)?;
                Family::Wheel { n: params[0] }
            }
            "whiskered_complete" => {
                want(2)?;
                Family::WhiskeredComplete {
                    n: params[0],
                    r: params[1],
                }
            }
            "staircase" => {
                want(1)?;
                Family::Staircase { n: params[0] }
            }
            "edgeless" => {
                want(1)?;
                Family::Edgeless { n: params[0] }
            }
            other => return Err(Error::InvalidParameter(format!("unknown family {other}"))),
        })
    }
}

// ---------------------------------------------------------------------------
// Constructions

/// `g * h`: `g` on `0..m`, `h` shifted to `m..m+n`, plus every edge between them.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    combine(g, h, true)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    combine(g, h, false)
}

fn combine(g: &Graph, h: &Graph, connect: bool) -> Result<Graph> {
    let (m, n) = (g.n, h.n);
    if m + n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: m + n,
            max: MAX_VERTICES,
        });
    }
    let g_all = full_mask(m);
    let h_all = full_mask(n) << m;
    let mut adj = Vec::with_capacity(m + n);
    for &a in &g.adj {
        adj.push(a | if connect { h_all } else { 0 });
    }
    for &a in &h.adj {
        adj.push((a << m) | if connect { g_all } else { 0 });
    }
    Ok(Graph::from_adjacency(adj))
}

/// Join of `l` copies of `g`.
pub fn self_join(g: &Graph, l: usize) -> Result<Graph> {
    if l == 0 {
        return Err(Error::InvalidParameter("self_join needs l >= 1".into()));
    }
    (1..l).try_fold(g.clone(), |acc, _| join(&acc, g))
}

/// Disjoint union of `k` copies of `g` (`k = 0` gives the empty graph).
pub fn disjoint_copies(g: &Graph, k: usize) -> Result<Graph> {
    (0..k).try_fold(edgeless(0)?, |acc, _| disjoint_union(&acc, g))
}

pub fn complement(g: &Graph) -> Graph {
    let all = g.vertex_mask();
    let adj = (0..g.n).map(|v| all & !g.adj[v] & !bit(v)).collect();
    Graph::from_adjacency(adj)
}

/// Induced subgraph on `vertices`, relabeled to `0..k` in increasing order.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let mut vs = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if let Some(&v) = vs.iter().find(|&&v| v >= g.n) {
        return Err(Error::VertexOutOfRange(v, v, g.n));
    }
    Ok(induced_by_mask(g, vec_to_mask(&vs)))
}

pub(crate) fn induced_by_mask(g: &Graph, mask: VertexMask) -> Graph {
    let vs = mask_to_vec(mask);
    let adj = vs
        .iter()
        .map(|&v| {
            vs.iter()
                .enumerate()
                .filter(|&(_, &u)| g.adj[v] & bit(u) != 0)
                .fold(0, |m, (k, _)| m | bit(k))
        })
        .collect();
    Graph::from_adjacency(adj)
}

// ---------------------------------------------------------------------------
// Covers and independent sets

/// Minimal vertex covers of a graph, i.e. the minimal primes of its edge ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSet {
    pub covers: Vec<Vec<usize>>,
    /// Size of a smallest cover.
    pub height: usize,
    /// Number of covers of size `height`.
    pub min_count: usize,
}

impl CoverSet {
    pub fn masks(&self) -> Vec<VertexMask> {
        self.covers.iter().map(|c| vec_to_mask(c)).collect()
    }

    pub fn minimum_covers(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.covers.iter().filter(move |c| c.len() == self.height)
    }
}

/// Maximal independent sets via Bron–Kerbosch with pivoting on the complement.
/// Sorted by vertex list.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexMask> {
    let all = g.vertex_mask();
    let co: Vec<VertexMask> = (0..g.n).map(|v| all & !g.adj[v] & !bit(v)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&co, 0, all, 0, &mut out);
    out.sort_by(|&a, &b| lex_cmp(a, b));
    out
}

fn bron_kerbosch(
    nbr: &[VertexMask],
    r: VertexMask,
    mut p: VertexMask,
    mut x: VertexMask,
    out: &mut Vec<VertexMask>,
) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = mask_to_vec(p | x)
        .into_iter()
        .max_by_key(|&u| (p & nbr[u]).count_ones())
        .expect("p nonempty");
    let mut cand = p & !nbr[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let vb = bit(v);
        bron_kerbosch(nbr, r | vb, p & nbr[v], x & nbr[v], out);
        p &= !vb;
        x |= vb;
        cand &= !vb;
    }
}

/// All independent sets (faces of the independence complex), including the empty set.
pub fn independent_sets(g: &Graph) -> Vec<VertexMask> {
    independent_sets_within(g, g.vertex_mask())
}

pub(crate) fn independent_sets_within(g: &Graph, within: VertexMask) -> Vec<VertexMask> {
    fn rec(adj: &[VertexMask], cur: VertexMask, avail: VertexMask, out: &mut Vec<VertexMask>) {
        out.push(cur);
        let mut rest = avail;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rec(adj, cur | bit(v), rest & !adj[v], out);
        }
    }
    let mut out = Vec::new();
    rec(&g.adj, 0, within, &mut out);
    out
}

/// Complete list of minimal vertex covers, the complements of maximal independent sets.
pub fn minimal_vertex_covers(g: &Graph) -> CoverSet {
    let all = g.vertex_mask();
    let mut masks: Vec<VertexMask> = maximal_independent_sets(g)
        .into_iter()
        .map(|m| all & !m)
        .collect();
    masks.sort_by(|&a, &b| lex_cmp(a, b));
    let height = masks.iter().map(|m| m.count_ones() as usize).min().unwrap_or(0);
    let min_count = masks
        .iter()
        .filter(|m| m.count_ones() as usize == height)
        .count();
    CoverSet {
        covers: masks.into_iter().map(mask_to_vec).collect(),
        height,
        min_count,
    }
}

/// Height of the edge ideal: the size of a smallest vertex cover.
pub fn height(g: &Graph) -> usize {
    minimal_vertex_covers(g).height
}

/// Krull dimension of `S/I(G)`: `n` minus the height. Isolated vertices count.
pub fn krull_dim(g: &Graph) -> usize {
    g.n - height(g)
}

/// Multiplicity of `S/I(G)` as the number of minimum vertex covers.
pub fn multiplicity_by_covers(g: &Graph) -> usize {
    minimal_vertex_covers(g).min_count
}

/// Largest induced matching, by exhaustive search over edge subsets.
pub fn induced_matching_number(g: &Graph) -> usize {
    fn rec(g: &Graph, start: usize, blocked: VertexMask, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        if size + (g.edges.len() - start) <= *best {
            return;
        }
        for k in start..g.edges.len() {
            let (a, b) = g.edges[k];
            let closed = g.adj[a] | g.adj[b] | bit(a) | bit(b);
            if (bit(a) | bit(b)) & blocked == 0 {
                rec(g, k + 1, blocked | closed, size + 1, best);
            }
        }
    }
    let mut best = 0;
    rec(g, 0, 0, 0, &mut best);
    best
}

// ---------------------------------------------------------------------------
// Predicates

/// Chordal iff vertices can be eliminated one simplicial vertex at a time.
pub fn is_chordal(g: &Graph) -> bool {
    let mut alive = g.vertex_mask();
    while alive != 0 {
        let simplicial = mask_to_vec(alive).into_iter().find(|&v| {
            let nb = g.adj[v] & alive;
            mask_to_vec(nb)
                .into_iter()
                .all(|u| nb & !bit(u) & !g.adj[u] == 0)
        });
        match simplicial {
            Some(v) => alive &= !bit(v),
            None => return false,
        }
    }
    true
}

pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&complement(g))
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut color = vec![None::<bool>; g.n];
    for s in 0..g.n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let c = color[v].unwrap();
            for u in mask_to_vec(g.adj[v]) {
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        stack.push(u);
                    }
                    Some(cu) if cu == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Connected components of the subgraph induced on `within`.
pub(crate) fn components_within(adj: &[VertexMask], within: VertexMask) -> Vec<VertexMask> {
    let mut rest = within;
    let mut comps = Vec::new();
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & within & !comp;
            comp |= new;
            frontier |= new;
        }
        rest &= !comp;
        comps.push(comp);
    }
    comps
}

pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    components_within(&g.adj, g.vertex_mask())
        .into_iter()
        .map(mask_to_vec)
        .collect()
}

pub fn is_forest(g: &Graph) -> bool {
    g.edges.len() + connected_components(g).len() == g.n
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges.iter().any(|&(a, b)| g.adj[a] & g.adj[b] != 0)
}
