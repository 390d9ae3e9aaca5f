//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Each adjacency row is a single `u64`, so neighbourhood intersections and
//! degree counts are word operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids in `0..64`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
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
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph with vertices `0..n`.
///
/// Rows are symmetric with a zero diagonal; every constructor maintains this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build a graph from an edge list. Duplicate edges are collapsed.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Cycle `0-1-...-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges)
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &edges)
    }

    /// Build from raw adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mask = VertexSet::full(n).0;
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    n,
                });
            }
            if row >> u & 1 == 1 {
                return Err(Error::Loop(u));
            }
            for v in VertexSet(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(VertexSet::full(self.n)).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u >> 1 << 1 << u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).0;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| !row & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// Every vertex of `x` adjacent to every vertex of `y` (sets disjoint).
    pub fn is_complete_between(&self, x: VertexSet, y: VertexSet) -> bool {
        x.iter().all(|v| y.is_subset(self.neighbors(v)))
    }

    /// No edge between `x` and `y`.
    pub fn is_anticomplete_between(&self, x: VertexSet, y: VertexSet) -> bool {
        x.iter().all(|v| self.neighbors(v).is_disjoint(y))
    }

    /// Subgraph induced by `x`, relabelled `0..|x|` in ascending order of `x`.
    pub fn induced(&self, x: VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        let keep = x.to_vec();
        let adj = keep.iter().map(|&u| compress(self.adj[u], x)).collect();
        Ok(Graph { n: keep.len(), adj })
    }

    pub fn remove_vertex(&self, w: usize) -> Result<Graph> {
        self.check_vertex(w)?;
        self.induced(self.vertices().without(w))
    }

    /// Append vertex `n` adjacent to exactly `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        self.check_set(nbrs)?;
        if self.n == MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        let w = self.n;
        let mut adj = self.adj.clone();
        for v in nbrs {
            adj[v] |= 1u64 << w;
        }
        adj.push(nbrs.0);
        Ok(Graph { n: w + 1, adj })
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::BadPermutation);
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::BadPermutation);
            }
            seen.insert(p);
        }
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = VertexSet(self.adj[u])
                .iter()
                .fold(0, |acc, v| acc | 1u64 << perm[v]);
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Image of `s` (which must not contain `w`) under the relabelling
    /// performed by `remove_vertex(w)`.
    pub fn shift_after_removal(s: VertexSet, w: usize) -> VertexSet {
        let low = s.0 & ((1u64 << w) - 1);
        let high = if w >= 63 { 0 } else { s.0 >> (w + 1) << w };
        VertexSet(low | high)
    }
}

/// Pack the bits of `row` selected by `keep` into the low bits, preserving order.
fn compress(row: u64, keep: VertexSet) -> u64 {
    let mut out = 0u64;
    for (i, v) in keep.iter().enumerate() {
        out |= (row >> v & 1) << i;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            Graph::build(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(Graph::build(3, &[(1, 1)]), Err(Error::Loop(1))));
        assert!(matches!(Graph::empty(65), Err(Error::TooManyVertices(65))));
    }

    #[test]
    fn build_small_graphs() {
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);

        let c5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.degrees(), vec![2; 5]);

        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (1, 0)]).unwrap();
        let mut d = p4.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, vec![2, 2, 1, 1]);
        assert_eq!(p4.edge_count(), 3);
    }

    #[test]
    fn complement_of_p4_is_p4_relabelled() {
        // P4 = 0-1-2-3; complement edges 02, 03, 13 form the path 2-0-3-1.
        let p4 = Graph::path(4).unwrap();
        let co = p4.complement();
        assert_eq!(co.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        assert_eq!(co.permute(&[1, 3, 0, 2]).unwrap(), p4);
    }

    #[test]
    fn complement_involution_and_edge_count() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.complement().edge_count(), 10 - 5);
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.complement(), k1);
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            c5.induced(VertexSet(0b111)).unwrap(),
            Graph::path(3).unwrap()
        );
        assert_eq!(c5.induced(VertexSet::EMPTY).unwrap().order(), 0);
        assert_eq!(c5.induced(c5.vertices()).unwrap(), c5);
        assert!(c5.induced(VertexSet::singleton(5)).is_err());
        // {0, 2, 3}: only edge 2-3 survives, relabelled 1-2.
        assert_eq!(
            c5.induced([0, 2, 3].into_iter().collect()).unwrap().edges(),
            vec![(1, 2)]
        );
    }

    #[test]
    fn vertex_surgery() {
        let k2 = Graph::complete(2).unwrap();
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k2.remove_vertex(0).unwrap(), k1);
        assert_eq!(k1.add_vertex(VertexSet::singleton(0)).unwrap(), k2);
        let c5 = Graph::cycle(5).unwrap();
        let grown = c5.add_vertex([1, 3].into_iter().collect()).unwrap();
        assert_eq!(grown.remove_vertex(5).unwrap(), c5);
        assert!(c5.remove_vertex(5).is_err());
        assert!(c5.add_vertex(VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn shift_after_removal_matches_induced_labels() {
        let s: VertexSet = [0, 2, 5, 6].into_iter().collect();
        assert_eq!(Graph::shift_after_removal(s, 3).to_vec(), vec![0, 2, 4, 5]);
        assert_eq!(
            Graph::shift_after_removal(s.without(2), 2).to_vec(),
            vec![0, 4, 5]
        );
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [1, 4, 9].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(1));
        assert!(s.contains(9) && !s.contains(2));
        assert_eq!(s.without(4).to_vec(), vec![1, 9]);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(format!("{s:?}"), "{1, 4, 9}");
    }
}
