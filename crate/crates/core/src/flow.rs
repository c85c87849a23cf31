//! Unit-capacity max-flow on an undirected multigraph by BFS augmenting
//! paths. Every edge carries at most one unit in either direction.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::graph::{EdgeId, MultiGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MinCut {
    pub value: usize,
    /// Vertices reachable from the sources in the final residual graph.
    pub source_side: Vec<VertexId>,
    /// Edges crossing from `source_side` to the rest, ascending.
    pub cut: Vec<EdgeId>,
}

/// Max flow from the vertex set `sources` to `sinks`, each set contracted
/// to a single node. Only edges in `active` (all live edges when `None`)
/// are usable. The sets must be disjoint.
pub(crate) fn min_cut(
    g: &MultiGraph,
    active: Option<&FixedBitSet>,
    sources: &[VertexId],
    sinks: &[VertexId],
) -> MinCut {
    let n = g.vertex_count();
    let usable = |e: EdgeId| active.is_none_or(|m| m.contains(e.index()));
    // flow[e] = +1 when one unit moves from the first endpoint to the second.
    let mut flow = vec![0i8; g.edge_bound()];
    let mut is_source = vec![false; n];
    let mut is_sink = vec![false; n];
    for s in sources {
        is_source[s.index()] = true;
    }
    for t in sinks {
        is_sink[t.index()] = true;
    }

    let residual = |flow: &[i8], e: EdgeId, from: VertexId| -> bool {
        let (a, _) = g.endpoints(e).expect("live edge");
        if a == from {
            flow[e.index()] < 1
        } else {
            flow[e.index()] > -1
        }
    };

    let mut value = 0;
    loop {
        let mut pred: Vec<Option<(EdgeId, VertexId)>> = vec![None; n];
        let mut seen = is_source.clone();
        let mut queue: VecDeque<VertexId> = sources.iter().copied().collect();
        let mut reached = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for &e in g.incident(x).expect("known vertex") {
                if !usable(e) || !residual(&flow, e, x) {
                    continue;
                }
                let y = g.opposite(e, x).expect("incident edge");
                if seen[y.index()] {
                    continue;
                }
                seen[y.index()] = true;
                pred[y.index()] = Some((e, x));
                if is_sink[y.index()] {
                    reached = Some(y);
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }
        let Some(mut y) = reached else {
            let source_side: Vec<VertexId> = g.vertices().filter(|v| seen[v.index()]).collect();
            let cut = g
                .edges()
                .filter(|&(e, a, b)| usable(e) && seen[a.index()] != seen[b.index()])
                .map(|(e, _, _)| e)
                .collect();
            return MinCut {
                value,
                source_side,
                cut,
            };
        };
        while let Some((e, x)) = pred[y.index()] {
            let (a, _) = g.endpoints(e).expect("live edge");
            flow[e.index()] += if a == x { 1 } else { -1 };
            y = x;
        }
        value += 1;
    }
}
