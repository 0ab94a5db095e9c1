//! Small simple undirected graphs stored as one 64-bit adjacency row per vertex.

use std::fmt;

use thiserror::Error;

/// Largest supported order. One machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency rows are not symmetric at vertex {0}")]
    Asymmetric(usize),
}

/// A set of vertices as a bit mask. Bit `i` set means vertex `i` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_ORDER);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
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
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Highest index set, or `None` for the empty set.
    #[inline]
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph of order at most 64.
///
/// Row `v` holds the neighbourhood of `v`. Rows are symmetric, loop free, and
/// carry no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        Ok(g)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.set_edge(n - 1, 0);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw adjacency rows, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1 << u << 1).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set_edge(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        Ok(())
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    /// Builds a graph from adjacency rows, rejecting asymmetric rows, loops,
    /// and bits beyond the order.
    pub fn from_rows(rows: &[u64]) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut g = Graph::empty(n)?;
        for (u, &row) in rows.iter().enumerate() {
            for v in VertexSet(row).iter() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                g.set_edge(u, v);
            }
        }
        if g.rows() != rows {
            let bad = (0..n).find(|&u| g.adj[u] != rows[u]).unwrap_or(0);
            return Err(GraphError::Asymmetric(bad));
        }
        Ok(g)
    }

    /// Checks the structural invariants: symmetry, no loops, no stray bits.
    pub fn is_well_formed(&self) -> bool {
        let full = VertexSet::full(self.n).bits();
        (0..self.n).all(|u| {
            let row = self.adj[u];
            row & !full == 0
                && row >> u & 1 == 0
                && VertexSet(row).iter().all(|v| self.adj[v] >> u & 1 == 1)
        }) && self.adj[self.n..].iter().all(|&r| r == 0)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Flips every non-loop adjacency bit.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & full & !(1u64 << v);
        }
        g
    }

    /// `self + other`: the vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut g = self.clone();
        g.n = n;
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// `G[s]`, relabelled by increasing original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().collect();
        let mut g = Graph {
            n: keep.len(),
            adj: [0; MAX_ORDER],
        };
        for (i, &u) in keep.iter().enumerate() {
            let row = self.adj[u] & s.bits();
            g.adj[i] = compress_bits(row, s.bits());
        }
        g
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        Ok(self.induced_unchecked(keep))
    }

    /// Appends vertex `order()` adjacent exactly to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        if self.n >= MAX_ORDER {
            return Err(GraphError::OrderTooLarge(self.n + 1));
        }
        self.check_set(nbrs)?;
        Ok(self.add_vertex_unchecked(nbrs))
    }

    #[inline]
    pub(crate) fn add_vertex_unchecked(&self, nbrs: VertexSet) -> Graph {
        let mut g = self.clone();
        let w = self.n;
        g.n += 1;
        g.adj[w] = nbrs.bits();
        for u in nbrs.iter() {
            g.adj[u] |= 1u64 << w;
        }
        g
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_ORDER],
        };
        for u in 0..self.n {
            let mut row = 0u64;
            for v in VertexSet(self.adj[u]).iter() {
                row |= 1u64 << perm[v];
            }
            g.adj[perm[u]] = row;
        }
        g
    }

    /// Nonadjacent distinct vertices of `s` only.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| (self.adj[v] | (1u64 << v)) & s.bits() == s.bits())
    }
}

/// Packs the bits of `row` selected by `mask` into the low positions.
#[inline]
fn compress_bits(row: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let b = m.trailing_zeros();
        if row >> b & 1 == 1 {
            out |= 1u64 << i;
        }
        i += 1;
        m &= m - 1;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
