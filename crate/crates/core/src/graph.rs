//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! neighbourhood row per vertex.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n - 1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest member, if any.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Vertices;

    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

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

impl ExactSizeIterator for Vertices {}

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

/// Undirected simple graph. Immutable once built; every mutation returns a
/// new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).bits();
        for (i, row) in g.adj.iter_mut().enumerate() {
            *row = full & !(1u64 << i);
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::NotAnEdge { u: a, v: b });
            }
            g.adj[a] |= 1u64 << b;
            g.adj[b] |= 1u64 << a;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking every structural
    /// invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n });
        }
        let full = VertexSet::full(n).bits();
        for (i, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> i & 1 == 1 {
                return Err(Error::NotAnEdge { u: i, v: i });
            }
            for j in VertexSet::from_bits(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::NotAnEdge { u: j, v: i });
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Graph whose edges are the set bits of `mask` in upper-triangle
    /// column order: bit 0 is {0,1}, then {0,2}, {1,2}, {0,3}, ...
    /// This is the graph6 body order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut adj = vec![0u64; n];
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    adj[i] |= 1u64 << j;
                    adj[j] |= 1u64 << i;
                }
                bit += 1;
            }
        }
        Graph { n, adj }
    }

    /// Inverse of [`Graph::from_edge_mask`]; `None` when the pair count
    /// exceeds 64 bits.
    pub fn edge_mask(&self) -> Option<u64> {
        if self.n * self.n.saturating_sub(1) / 2 > 64 {
            return None;
        }
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.adj[i] >> j & 1 == 1 {
                    mask |= 1u64 << bit;
                }
                bit += 1;
            }
        }
        Some(mask)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &row)| !row & full & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// `N(U)`: every vertex adjacent to some member of `U`. May meet `U`.
    pub fn neighbor_set(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .filter(|&v| v < self.n)
            .fold(VertexSet::EMPTY, |acc, v| acc | VertexSet(self.adj[v]))
    }

    /// Subgraph induced by `set`, with members renumbered in ascending order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph> {
        if !set.is_subset(self.vertices()) {
            let vertex = (set - self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let members = set.to_vec();
        let adj = members
            .iter()
            .map(|&old| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[old] >> w & 1 == 1)
                    .fold(0u64, |row, (new, _)| row | 1u64 << new)
            })
            .collect();
        Ok(Graph {
            n: members.len(),
            adj,
        })
    }

    pub fn without_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::NotAnEdge { u: e.u, v: e.v });
        }
        let mut adj = self.adj.clone();
        adj[e.u] &= !(1u64 << e.v);
        adj[e.v] &= !(1u64 << e.u);
        Ok(Graph { n: self.n, adj })
    }

    /// `G - v`, renumbering the vertices above `v` down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(keep)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components ordered by their lowest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices().bits();
        let mut parts = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let part = self.reach(start, rest);
            parts.push(VertexSet(part));
            rest &= !part;
        }
        parts
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices().bits()) == self.vertices().bits()
    }

    /// Edges whose removal increases the component count, found by deleting
    /// each edge in turn and recounting.
    pub fn bridges(&self) -> Vec<Edge> {
        let base = self.component_count();
        self.edges()
            .into_iter()
            .filter(|&e| {
                let g = self.without_edge(e).expect("edge taken from the graph");
                g.component_count() > base
            })
            .collect()
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (i, &row) in self.adj.iter().enumerate() {
            adj[perm[i]] = VertexSet(row).iter().fold(0, |r, j| r | 1u64 << perm[j]);
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field(
                "edges",
                &self.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path fits")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle fits")
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star fits")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::complete(n).expect("complete graph fits")
    }

    /// Triangle 0-1-2 with pendant vertex 3 hanging off 2.
    pub fn paw() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).expect("paw fits")
    }
}
