//! The six-vertex counterexample: every terminal has degree 2 and the
//! graph survives any single edge deletion, yet two interior vertices of
//! degree 3 prevent two disjoint chains.

use crate::graph::{EdgeId, MultiGraph, Terminals, VertexId};

pub const V1: VertexId = VertexId::new(0);
pub const V2: VertexId = VertexId::new(1);
pub const V3: VertexId = VertexId::new(2);
pub const V4: VertexId = VertexId::new(3);
pub const Y1: VertexId = VertexId::new(4);
pub const Y2: VertexId = VertexId::new(5);

pub const E1: EdgeId = EdgeId::new(0);
pub const E2: EdgeId = EdgeId::new(1);
pub const E3: EdgeId = EdgeId::new(2);
pub const H1: EdgeId = EdgeId::new(3);
pub const H2: EdgeId = EdgeId::new(4);
pub const H3: EdgeId = EdgeId::new(5);
pub const G: EdgeId = EdgeId::new(6);

pub const NAMES: &[&str] = &["counterexample"];

pub fn counterexample() -> (MultiGraph, Terminals) {
    let mut g = MultiGraph::with_vertices(6);
    let edges = [
        (V1, Y1),
        (V2, Y1),
        (V3, Y1),
        (V2, Y2),
        (V3, Y2),
        (V4, Y2),
        (V1, V4),
    ];
    for (u, w) in edges {
        g.add_edge(u, w).expect("fixture edges are valid");
    }
    let t = Terminals::new(V1, V2, V3, V4).expect("fixture terminals are distinct");
    (g, t)
}

pub fn by_name(name: &str) -> Option<(MultiGraph, Terminals)> {
    match name {
        "counterexample" => Some(counterexample()),
        _ => None,
    }
}
