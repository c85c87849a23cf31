//! Turning chains back into walks: homological paths into paths, cycles
//! into edge-disjoint closed walks, and general boundaries into terminal
//! pairings.
//!
//! Every construction consumes the chain one summand at a time and always
//! takes the smallest available `EdgeId`, so outputs are deterministic.

use std::fmt;

use serde::Serialize;

use crate::chain::{boundary, expect_boundary, EdgeChain, VertexChain};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};

/// Alternating sequence `(w0, e1, w1, ..., et, wt)` with pairwise distinct
/// edges. Vertices may repeat; `t = 0` is the trivial walk at `w0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathSeq {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl PathSeq {
    pub fn trivial(v: VertexId) -> Self {
        PathSeq {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds a sequence from parts, checking incidence and edge distinctness.
    pub fn from_parts(g: &MultiGraph, vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Result<Self> {
        let p = PathSeq { vertices, edges };
        p.validate(g)?;
        Ok(p)
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("path has at least one vertex")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    pub fn edge_chain(&self) -> EdgeChain {
        self.edges.iter().copied().collect()
    }

    pub fn reversed(&self) -> PathSeq {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        PathSeq { vertices, edges }
    }

    fn push(&mut self, e: EdgeId, v: VertexId) {
        self.edges.push(e);
        self.vertices.push(v);
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        if self.vertices.len() != self.edges.len() + 1 {
            return Err(Error::BadBoundary {
                expected: format!("{} vertices", self.edges.len() + 1),
                found: format!("{} vertices", self.vertices.len()),
            });
        }
        for v in &self.vertices {
            g.check_vertex(*v)?;
        }
        let mut seen = std::collections::BTreeSet::new();
        for (i, &e) in self.edges.iter().enumerate() {
            if !seen.insert(e) {
                return Err(Error::BadBoundary {
                    expected: "distinct edges".into(),
                    found: format!("{e} repeated"),
                });
            }
            let (a, b) = g.endpoints(e)?;
            let (x, y) = (self.vertices[i], self.vertices[i + 1]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(Error::BadBoundary {
                    expected: format!("{x}+{y}"),
                    found: format!("{a}+{b} for {e}"),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for PathSeq {
    /// Renders as `v0 -e3- v2 -e7- v1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices[0])?;
        for (e, v) in self.edges.iter().zip(&self.vertices[1..]) {
            write!(f, " -{e}- {v}")?;
        }
        Ok(())
    }
}

/// `n` pairwise edge-disjoint paths whose endpoints together are the 2n
/// given vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TerminalPairing {
    pub paths: Vec<PathSeq>,
}

impl TerminalPairing {
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.paths.iter().map(|p| (p.start(), p.end()))
    }

    pub fn endpoints(&self) -> VertexChain {
        self.pairs().flat_map(|(a, b)| [a, b]).collect()
    }
}

/// Smallest-id summand of `p` incident to `v`.
fn smallest_incident(g: &MultiGraph, p: &EdgeChain, v: VertexId) -> Result<Option<EdgeId>> {
    Ok(g.incident(v)?.iter().copied().find(|&e| p.contains(e)))
}

/// Walks backwards from `v` through `p` until reaching `u`, removing the
/// used summands from `p`. Requires `boundary(p) = u + v`.
fn walk_back(g: &MultiGraph, p: &mut EdgeChain, u: VertexId, v: VertexId) -> Result<PathSeq> {
    let mut rev = PathSeq::trivial(v);
    let mut cur = v;
    while cur != u {
        let e =
            smallest_incident(g, p, cur)?.expect("a vertex with odd chain degree has an incident summand");
        p.toggle(e);
        cur = g.opposite(e, cur)?;
        rev.push(e, cur);
    }
    Ok(rev.reversed())
}

/// A path from `u` to `v` using only summands of `p`, where
/// `boundary(p) = u + v`. Not every summand need be used.
pub fn extract_path(g: &MultiGraph, p: &EdgeChain, u: VertexId, v: VertexId) -> Result<PathSeq> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::DuplicateVertex(u));
    }
    let target: VertexChain = [u, v].into_iter().collect();
    expect_boundary(g, p, &target)?;
    let mut rest = p.clone();
    walk_back(g, &mut rest, u, v)
}

/// Splits a homological cycle into pairwise edge-disjoint closed walks
/// whose edge sets partition the support of `c`.
pub fn decompose_cycles(g: &MultiGraph, c: &EdgeChain) -> Result<Vec<PathSeq>> {
    let b = boundary(g, c)?;
    if !b.is_zero() {
        return Err(Error::NotACycle(b.to_string()));
    }
    let mut rest = c.clone();
    let mut cycles = Vec::new();
    while let Some(h) = rest.first() {
        let (u, w) = g.endpoints(h)?;
        rest.toggle(h);
        // rest now has boundary u + w; close the cycle through it.
        let back = walk_back(g, &mut rest, w, u)?;
        let mut cycle = PathSeq::trivial(u);
        cycle.push(h, w);
        for (e, x) in back.edges.iter().zip(&back.vertices[1..]) {
            cycle.push(*e, *x);
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Pairs up the 2n vertices of `endpoints` by n edge-disjoint paths drawn
/// from the summands of `p`, where `boundary(p) = endpoints`.
///
/// Induction on the number of endpoints and then on the support: take the
/// largest remaining endpoint `x` and its smallest incident summand `e`
/// ending at `w`. If `w` is an endpoint, `(w, e, x)` is a finished path;
/// otherwise `x` is replaced by `w` and `e` is appended to whichever path
/// ends at `w` once the smaller problem is solved.
///
/// Paths are oriented from their smaller endpoint and sorted by it.
pub fn pair_terminals(g: &MultiGraph, p: &EdgeChain, endpoints: &VertexChain) -> Result<TerminalPairing> {
    if endpoints.is_zero() || endpoints.len() % 2 == 1 {
        return Err(Error::OddTargetCount(endpoints.len()));
    }
    for v in endpoints.iter() {
        g.check_vertex(v)?;
    }
    expect_boundary(g, p, endpoints)?;

    let mut rest = p.clone();
    let mut open = endpoints.clone();
    let mut paths: Vec<PathSeq> = Vec::new();
    let mut extensions: Vec<(VertexId, EdgeId, VertexId)> = Vec::new();

    while let Some(x) = open.last() {
        let e = smallest_incident(g, &rest, x)?.expect("an endpoint has odd chain degree");
        let w = g.opposite(e, x)?;
        rest.toggle(e);
        open.toggle(x);
        if open.contains(w) {
            open.toggle(w);
            let mut path = PathSeq::trivial(w);
            path.push(e, x);
            paths.push(path);
        } else {
            open.toggle(w);
            extensions.push((w, e, x));
        }
    }

    for (w, e, x) in extensions.into_iter().rev() {
        let path = paths
            .iter_mut()
            .find(|p| p.start() == w || p.end() == w)
            .expect("exactly one path ends at a replaced endpoint");
        if path.end() != w {
            *path = path.reversed();
        }
        path.push(e, x);
    }

    for path in &mut paths {
        if path.start() > path.end() {
            *path = path.reversed();
        }
    }
    paths.sort_by_key(|p| (p.start(), p.end()));
    Ok(TerminalPairing { paths })
}
