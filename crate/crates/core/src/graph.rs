//! Simple undirected graphs on at most 64 vertices with bit-row adjacency.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices as a bit mask; bit `v` is vertex index `v`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from 0-based edge pairs. Repeated edges
    /// are accepted; self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = alloc::vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph {
            n,
            adj,
            labels: None,
        })
    }

    /// Same as [`Graph::new`] but with 1-based endpoints.
    pub fn from_one_based<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut shifted = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            shifted.push((u - 1, v - 1));
        }
        Graph::new(n, shifted)
    }

    /// Builds directly from adjacency rows. Rows must be symmetric and
    /// irreflexive.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let all = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                let w = (row & !all).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for w in Bits(row) {
                if rows[w] >> v & 1 == 0 {
                    return Err(Error::Params(format!("adjacency not symmetric at {v},{w}")));
                }
            }
        }
        Ok(Graph {
            n,
            adj: rows,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Params(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let all = low_bits(n);
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Graph::from_rows((0..n).map(|v| all & !(1 << v)).collect())
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, core::iter::empty())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.n).map(|v| self.label(v)).collect()
    }

    pub fn has_custom_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.difference(self.closed_neighbors(v)).is_empty())
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        match set.difference(self.vertices()).first() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
        }
    }

    /// Induced subgraph on `keep`, vertices renumbered in increasing order.
    /// Also returns the original index of each new vertex.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(keep)?;
        if keep.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let map = keep.to_vec();
        let rows = map
            .iter()
            .map(|&old| {
                let row = self.adj[old] & keep.0;
                compress(row, keep.0)
            })
            .collect();
        let labels = map.iter().map(|&v| self.label(v)).collect();
        let g = Graph {
            n: map.len(),
            adj: rows,
            labels: Some(labels),
        };
        Ok((g, map))
    }

    /// `G - T`: the induced subgraph on the complement of `removed`, keeping
    /// the original labels.
    pub fn delete_vertices(&self, removed: VertexSet) -> Result<Graph> {
        self.check_set(removed)?;
        self.induced(self.vertices().difference(removed))
            .map(|(g, _)| g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.delete_vertices(VertexSet::singleton(v))
    }

    /// `G_v`: completes the neighbourhood of `v` into a clique.
    pub fn saturate_neighborhood(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let nv = self.adj[v];
        let mut adj = self.adj.clone();
        for u in Bits(nv) {
            adj[u] |= nv & !(1 << u);
        }
        Ok(Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        })
    }

    /// Join product: disjoint union plus every edge between the two sides.
    /// The vertices of `other` follow those of `self`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let left = low_bits(self.n);
        let right = low_bits(n) & !left;
        let mut adj = Vec::with_capacity(n);
        adj.extend(self.adj.iter().map(|&r| r | right));
        adj.extend(other.adj.iter().map(|&r| r << self.n | left));
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            _ => Some(self.labels().into_iter().chain(other.labels()).collect()),
        };
        Ok(Graph { n, adj, labels })
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            _ => Some(self.labels().into_iter().chain(other.labels()).collect()),
        };
        Ok(Graph { n, adj, labels })
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Params(format!(
                "permutation of length {} for n={}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::Params("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut adj = alloc::vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = Bits(self.adj[v]).fold(0, |m, w| m | 1 << perm[w]);
        }
        let labels = self.labels.as_ref().map(|ls| {
            let mut out = alloc::vec![String::new(); self.n];
            for v in 0..self.n {
                out[perm[v]] = ls[v].clone();
            }
            out
        });
        Ok(Graph {
            n: self.n,
            adj,
            labels,
        })
    }

    /// Drops custom labels.
    pub fn unlabeled(&self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj.clone(),
            labels: None,
        }
    }

    /// Vertex sets of the connected components of the subgraph induced on
    /// `within`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within.0;
        let mut out = Vec::new();
        while left != 0 {
            let seed = left & left.wrapping_neg();
            let comp = self.reach(seed, within.0);
            out.push(VertexSet(comp));
            left &= !comp;
        }
        out
    }

    pub fn component_count_within(&self, within: VertexSet) -> usize {
        let mut left = within.0;
        let mut count = 0;
        while left != 0 {
            let seed = left & left.wrapping_neg();
            left &= !self.reach(seed, within.0);
            count += 1;
        }
        count
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.reach(1, self.vertices().0) == self.vertices().0
    }

    /// Vertices reachable from `seed` inside `within`.
    #[inline]
    pub(crate) fn reach(&self, seed: u64, within: u64) -> u64 {
        let mut seen = seed & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether `v` is a cut vertex of the subgraph induced on `within`.
    pub fn is_cut_vertex_within(&self, v: usize, within: VertexSet) -> bool {
        debug_assert!(within.contains(v));
        let rest = within.difference(VertexSet::singleton(v));
        self.component_count_within(rest) > self.component_count_within(within)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }
}

/// Packs the bits of `row` selected by `keep` into the low positions.
#[inline]
fn compress(row: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in Bits(keep).enumerate() {
        out |= (row >> v & 1) << i;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", self.label(u), self.label(v))?;
        }
        f.write_str("])")
    }
}
