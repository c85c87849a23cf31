//! Feasibility of a target boundary and the number of edge deletions
//! needed to destroy every chain with that boundary.
//!
//! A chain with boundary `T` exists iff every connected component holds an
//! even number of vertices of `T`. So a deletion kills all such chains iff
//! it leaves some component with an odd share of `T`. For four terminals a
//! minimal such deletion is the edge boundary of a side containing exactly
//! one terminal (a side with three has its complement holding one), so
//! resilience is the smallest of the four "one terminal against the other
//! three" min cuts.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::chain::VertexChain;
use crate::error::{Error, Result};
use crate::flow::min_cut;
use crate::graph::{EdgeId, MultiGraph, Terminals, VertexId};

/// An edge set whose deletion leaves `witness_component` as a union of
/// components holding `odd_count` terminals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub deleted: Vec<EdgeId>,
    pub witness_component: Vec<VertexId>,
    pub odd_count: usize,
}

impl CutCertificate {
    /// Re-checks the certificate from scratch against `g`.
    pub fn verify(&self, g: &MultiGraph, t: &Terminals) -> Result<bool> {
        let h = g.delete_edges(&self.deleted)?;
        let mut inside = vec![false; g.vertex_count()];
        for v in &self.witness_component {
            g.check_vertex(*v)?;
            inside[v.index()] = true;
        }
        // witness must be closed under components of g - D
        for (_, a, b) in h.edges() {
            if inside[a.index()] != inside[b.index()] {
                return Ok(false);
            }
        }
        let count = t.iter().filter(|v| inside[v.index()]).count();
        Ok(count == self.odd_count && count % 2 == 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resilience {
    pub k: usize,
    pub cert: CutCertificate,
}

/// True iff some chain has boundary exactly `targets`.
pub fn feasible(g: &MultiGraph, targets: &VertexChain) -> Result<bool> {
    if targets.len() % 2 == 1 {
        return Err(Error::OddTargetCount(targets.len()));
    }
    for v in targets.iter() {
        g.check_vertex(v)?;
    }
    Ok(odd_component(g, None, targets).is_none())
}

/// Some component (restricted to `active` edges) with an odd number of
/// targets, as (members, count).
fn odd_component(
    g: &MultiGraph,
    active: Option<&FixedBitSet>,
    targets: &VertexChain,
) -> Option<(Vec<VertexId>, usize)> {
    let labels = g.component_labels_where(|e| active.is_none_or(|m| m.contains(e.index())));
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut hits = vec![0usize; count];
    for v in targets.iter() {
        hits[labels[v.index()]] += 1;
    }
    let odd = hits.iter().position(|h| h % 2 == 1)?;
    let members = g.vertices().filter(|v| labels[v.index()] == odd).collect();
    Some((members, hits[odd]))
}

pub fn resilience(g: &MultiGraph, t: &Terminals) -> Result<Resilience> {
    t.check_in(g)?;
    Ok(resilience_within(g, None, t))
}

/// Resilience of the subgraph using only `active` edges.
pub(crate) fn resilience_within(g: &MultiGraph, active: Option<&FixedBitSet>, t: &Terminals) -> Resilience {
    let targets = VertexChain::from_terminals(t);
    if let Some((members, odd)) = odd_component(g, active, &targets) {
        return Resilience {
            k: 0,
            cert: CutCertificate {
                deleted: Vec::new(),
                witness_component: members,
                odd_count: odd,
            },
        };
    }
    let terms = t.as_array();
    let mut best: Option<Resilience> = None;
    for i in 0..4 {
        let others: Vec<VertexId> = (0..4).filter(|&j| j != i).map(|j| terms[j]).collect();
        let cut = min_cut(g, active, &[terms[i]], &others);
        let candidate = Resilience {
            k: cut.value,
            cert: CutCertificate {
                deleted: cut.cut,
                witness_component: cut.source_side,
                odd_count: 1,
            },
        };
        let better = match &best {
            None => true,
            Some(b) => (candidate.k, &candidate.cert.deleted) < (b.k, &b.cert.deleted),
        };
        if better {
            best = Some(candidate);
        }
    }
    best.expect("four candidate cuts")
}

/// Value-only variant used as a search bound.
pub(crate) fn resilience_value(g: &MultiGraph, active: Option<&FixedBitSet>, t: &Terminals) -> usize {
    let targets = VertexChain::from_terminals(t);
    if odd_component(g, active, &targets).is_some() {
        return 0;
    }
    let terms = t.as_array();
    let mut best = usize::MAX;
    for &v in &terms {
        let deg = g
            .incident(v)
            .expect("terminal in graph")
            .iter()
            .filter(|e| active.is_none_or(|m| m.contains(e.index())))
            .count();
        best = best.min(deg);
    }
    for i in 0..4 {
        if best == 0 {
            break;
        }
        let others: Vec<VertexId> = (0..4).filter(|&j| j != i).map(|j| terms[j]).collect();
        best = best.min(min_cut(g, active, &[terms[i]], &others).value);
    }
    best
}

/// Largest `k` such that `u` and `v` stay connected after deleting any
/// `k - 1` edges; the unit-capacity max-flow value between them.
pub fn two_terminal_resilience(g: &MultiGraph, u: VertexId, v: VertexId) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::DuplicateVertex(u));
    }
    Ok(min_cut(g, None, &[u], &[v]).value)
}
