//! Simple undirected graphs stored as bitset adjacency rows.

use std::fmt;

use crate::bitset;
use crate::error::GraphError;

/// Largest vertex count a [`Graph`] accepts. The constructions in this crate
/// stay well under 64 vertices; the cap only guards against absurd inputs.
pub const MAX_VERTICES: usize = 4096;

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` is a bitset of the neighbours of `v`. Rows are kept symmetric and
/// loop-free by every mutating method.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// A set of vertices of some host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            bits: vec![0; bitset::words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter_in(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_bits(n: usize, bits: Vec<u64>) -> Self {
        VertexSet { n, bits }
    }

    /// Number of vertices of the host graph.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe of {}", self.n);
        bitset::set(&mut self.bits, v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            bitset::clear(&mut self.bits, v);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && bitset::test(&self.bits, v)
    }

    pub fn len(&self) -> usize {
        bitset::count(&self.bits)
    }

    pub fn is_empty(&self) -> bool {
        bitset::is_empty(&self.bits)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bitset::ones(&self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn bits(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`]; use [`Graph::try_new`] for
    /// untrusted sizes.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("vertex count within cap")
    }

    pub fn try_new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge {
                n,
                cap: MAX_VERTICES,
            });
        }
        let words = bitset::words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        if n >= 3 {
            for v in 0..n {
                g.set_edge(v, (v + 1) % n);
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::try_new(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        bitset::count(&self.rows) / 2
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bitset::test(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.n, self.row(v).to_vec())
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::ones(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Maximum degree; 0 for the null graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            bitset::ones(self.row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Vertex pairs `(u, v)`, `u < v`, that are not edges, lexicographic.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// `G + uv`, leaving `self` untouched.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// `G - uv`, leaving `self` untouched.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.delete_edge(u, v)?;
        Ok(g)
    }

    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::EdgePresent(u.min(v), u.max(v)));
        }
        self.set_edge(u, v);
        Ok(())
    }

    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeAbsent(u.min(v), u.max(v)));
        }
        let w = self.words;
        bitset::clear(&mut self.rows[u * w..(u + 1) * w], v);
        bitset::clear(&mut self.rows[v * w..(v + 1) * w], u);
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// Sets `uv` without validation; callers guarantee `u != v`, both in range.
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words;
        bitset::set(&mut self.rows[u * w..(u + 1) * w], v);
        bitset::set(&mut self.rows[v * w..(v + 1) * w], u);
    }

    /// Joins every vertex of `a` to every vertex of `b` (pairs with equal
    /// endpoints are skipped).
    pub(crate) fn join(&mut self, a: impl IntoIterator<Item = usize>, b: &[usize]) {
        for u in a {
            for &v in b {
                if u != v {
                    self.set_edge(u, v);
                }
            }
        }
    }

    pub(crate) fn make_clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.set_edge(u, v);
            }
        }
    }

    /// The graph on the same vertex set with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced by `vs`, with vertices renumbered in the order given.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::new(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Number of triangles of the graph containing the pair `uv`
    /// (common neighbours of `u` and `v`).
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={}, ", self.n, self.edge_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
