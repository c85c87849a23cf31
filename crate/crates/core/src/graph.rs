//! Undirected multigraphs with stable edge identities.
//!
//! Parallel edges are first-class: two edges with the same endpoint pair
//! have different [`EdgeId`]s and everything downstream (chains, packings,
//! cut certificates) keys on the id. Loops are rejected at construction.
//! Deleting an edge leaves a tombstone so ids are never reused and chains
//! computed on a subgraph stay meaningful in the original graph.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(usize);

impl VertexId {
    pub const fn new(index: usize) -> Self {
        VertexId(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(usize);

impl EdgeId {
    pub const fn new(index: usize) -> Self {
        EdgeId(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A finite undirected multigraph without loops.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    /// Indexed by `EdgeId`; `None` marks a deleted edge.
    endpoints: Vec<Option<(VertexId, VertexId)>>,
    incidence: Vec<Vec<EdgeId>>,
    live_edges: usize,
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(count: usize) -> Self {
        MultiGraph {
            vertex_count: count,
            endpoints: Vec::new(),
            incidence: vec![Vec::new(); count],
            live_edges: 0,
        }
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.vertex_count);
        self.vertex_count += 1;
        self.incidence.push(Vec::new());
        v
    }

    pub fn add_edge(&mut self, u: VertexId, w: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if u == w {
            return Err(Error::LoopRejected(u));
        }
        let e = EdgeId(self.endpoints.len());
        self.endpoints.push(Some((u, w)));
        self.incidence[u.0].push(e);
        self.incidence[w.0].push(e);
        self.live_edges += 1;
        Ok(e)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edges currently present.
    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// One past the largest `EdgeId` ever issued; the size of dense edge-indexed tables.
    pub fn edge_bound(&self) -> usize {
        self.endpoints.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count).map(VertexId)
    }

    /// Live edges in increasing id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.endpoints
            .iter()
            .enumerate()
            .filter_map(|(i, ends)| ends.map(|(u, w)| (EdgeId(i), u, w)))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().map(|(e, _, _)| e)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.0 < self.vertex_count
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        matches!(self.endpoints.get(e.0), Some(Some(_)))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.endpoints
            .get(e.0)
            .copied()
            .flatten()
            .ok_or(Error::UnknownEdge(e))
    }

    /// The endpoint of `e` that is not `v`. `v` must be an endpoint of `e`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> Result<VertexId> {
        let (a, b) = self.endpoints(e)?;
        if a == v {
            Ok(b)
        } else if b == v {
            Ok(a)
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Edges incident to `v`, in increasing id order.
    pub fn incident(&self, v: VertexId) -> Result<&[EdgeId]> {
        self.check_vertex(v)?;
        Ok(&self.incidence[v.0])
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.incident(v)?.len())
    }

    /// Returns a copy of the graph without the edges in `deleted`. Vertices
    /// and the ids of surviving edges are unchanged.
    pub fn delete_edges<'a, I>(&self, deleted: I) -> Result<MultiGraph>
    where
        I: IntoIterator<Item = &'a EdgeId>,
    {
        let mut g = self.clone();
        let mut removed = BTreeSet::new();
        for &e in deleted {
            if !self.contains_edge(e) {
                return Err(Error::UnknownEdge(e));
            }
            if removed.insert(e) {
                g.endpoints[e.0] = None;
                g.live_edges -= 1;
            }
        }
        for list in &mut g.incidence {
            list.retain(|e| !removed.contains(e));
        }
        Ok(g)
    }

    pub(crate) fn remove_edge(&mut self, e: EdgeId) -> Result<()> {
        let (u, w) = self.endpoints(e)?;
        self.endpoints[e.0] = None;
        self.live_edges -= 1;
        self.incidence[u.0].retain(|&x| x != e);
        self.incidence[w.0].retain(|&x| x != e);
        Ok(())
    }

    /// Component label per vertex; labels are dense and ordered by the
    /// smallest vertex of each component.
    pub fn component_labels(&self) -> Vec<usize> {
        self.component_labels_where(|_| true)
    }

    pub(crate) fn component_labels_where(&self, keep: impl Fn(EdgeId) -> bool) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertex_count);
        for (e, u, w) in self.edges() {
            if keep(e) {
                uf.union(u.0, w.0);
            }
        }
        let mut root_label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        (0..self.vertex_count)
            .map(|v| {
                let r = uf.find(v);
                if root_label[r] == usize::MAX {
                    root_label[r] = next;
                    next += 1;
                }
                root_label[r]
            })
            .collect()
    }

    /// Partition of the vertex set into connected components. Blocks are
    /// sorted internally and ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let labels = self.component_labels();
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (v, &l) in labels.iter().enumerate() {
            blocks[l].push(VertexId(v));
        }
        blocks
    }
}

/// Four distinct terminal vertices `(v1, v2, v3, v4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Terminals([VertexId; 4]);

impl Terminals {
    pub fn new(v1: VertexId, v2: VertexId, v3: VertexId, v4: VertexId) -> Result<Self> {
        let t = [v1, v2, v3, v4];
        for i in 0..4 {
            for j in 0..i {
                if t[i] == t[j] {
                    return Err(Error::DuplicateVertex(t[i]));
                }
            }
        }
        Ok(Terminals(t))
    }

    pub fn from_indices(indices: [usize; 4]) -> Result<Self> {
        let [a, b, c, d] = indices.map(VertexId::new);
        Self::new(a, b, c, d)
    }

    pub fn as_array(&self) -> [VertexId; 4] {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn get(&self, i: usize) -> VertexId {
        self.0[i]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// Position of `v` in `(v1, v2, v3, v4)`.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.0.iter().position(|&t| t == v)
    }

    pub fn check_in(&self, g: &MultiGraph) -> Result<()> {
        self.iter().try_for_each(|v| g.check_vertex(v))
    }
}

impl fmt::Display for Terminals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// Union by size with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    #[test]
    fn parallel_edges_get_distinct_ids() {
        let mut g = MultiGraph::with_vertices(2);
        let a = g.add_edge(v(0), v(1)).unwrap();
        let b = g.add_edge(v(0), v(1)).unwrap();
        assert_ne!(a, b);
        assert_eq!(g.endpoints(a).unwrap(), g.endpoints(b).unwrap());
        assert_eq!(g.degree(v(0)).unwrap(), 2);
    }

    #[test]
    fn loops_and_unknown_vertices_rejected() {
        let mut g = MultiGraph::with_vertices(2);
        assert_eq!(g.add_edge(v(1), v(1)), Err(Error::LoopRejected(v(1))));
        assert_eq!(g.add_edge(v(0), v(7)), Err(Error::UnknownVertex(v(7))));
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn degrees_on_counterexample() {
        let (g, t) = fixture::counterexample();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(fixture::Y1).unwrap(), 3);
        for term in t.iter() {
            assert_eq!(g.degree(term).unwrap(), 2);
        }
        let isolated = MultiGraph::with_vertices(1);
        assert_eq!(isolated.degree(v(0)).unwrap(), 0);
        assert_eq!(isolated.degree(v(1)), Err(Error::UnknownVertex(v(1))));
    }

    #[test]
    fn delete_edges_keeps_ids_and_vertices() {
        let (g, _) = fixture::counterexample();
        let same = g.delete_edges(&[]).unwrap();
        assert_eq!(same, g);

        let h = g.delete_edges(&[fixture::G]).unwrap();
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 6);
        assert!(!h.contains_edge(fixture::G));
        assert!(h.contains_edge(fixture::H3));
        assert_eq!(h.connected_components().len(), 1);

        assert_eq!(
            g.delete_edges(&[EdgeId::new(99)]),
            Err(Error::UnknownEdge(EdgeId::new(99)))
        );
    }

    #[test]
    fn k4_minus_star_isolates_vertex() {
        let mut g = MultiGraph::with_vertices(4);
        let mut star = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                let e = g.add_edge(v(a), v(b)).unwrap();
                if a == 0 {
                    star.push(e);
                }
            }
        }
        let h = g.delete_edges(&star).unwrap();
        let comps = h.connected_components();
        assert_eq!(comps, vec![vec![v(0)], vec![v(1), v(2), v(3)]]);
    }

    #[test]
    fn components_basic() {
        let g = MultiGraph::with_vertices(3);
        assert_eq!(g.connected_components().len(), 3);

        let mut g = MultiGraph::with_vertices(4);
        g.add_edge(v(0), v(2)).unwrap();
        g.add_edge(v(1), v(3)).unwrap();
        assert_eq!(g.connected_components(), vec![vec![v(0), v(2)], vec![v(1), v(3)]]);
    }

    #[test]
    fn terminals_must_be_distinct() {
        assert!(Terminals::from_indices([0, 1, 2, 3]).is_ok());
        assert_eq!(
            Terminals::from_indices([0, 1, 1, 3]),
            Err(Error::DuplicateVertex(v(1)))
        );
        let t = Terminals::from_indices([0, 1, 2, 9]).unwrap();
        assert!(t.check_in(&MultiGraph::with_vertices(4)).is_err());
    }
}
