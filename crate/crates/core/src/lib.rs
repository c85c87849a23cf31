//! F2 chains on multigraphs, four-terminal resilience, and packings of
//! edge-disjoint chains with boundary `v1 + v2 + v3 + v4`.
//!
//! Edges are identified by [`EdgeId`], so parallel edges are distinct. A
//! chain is a set of edges added by symmetric difference; its boundary is
//! the set of vertices of odd degree in it.
//!
//! ```
//! use menger4::{fixture, max_packing, resilience};
//!
//! let (g, t) = fixture::counterexample();
//! assert_eq!(resilience(&g, &t).unwrap().k, 2);
//! assert_eq!(max_packing(&g, &t).unwrap().0, 1);
//! ```

pub mod chain;
pub mod cli;
mod error;
pub mod fixture;
mod flow;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod packing;
pub mod realize;
pub mod resilience;

pub use chain::{boundary, is_cycle, EdgeChain, VertexChain};
pub use error::{Error, Result};
pub use graph::{EdgeId, MultiGraph, Terminals, VertexId};
pub use packing::{
    augment_odd, find_packing, max_packing, pack_complete_quad, pack_star, paths_packing, theorem6_check,
    AugmentPlan, Packing,
};
pub use realize::{decompose_cycles, extract_path, pair_terminals, PathSeq, TerminalPairing};
pub use resilience::{feasible, resilience, two_terminal_resilience, CutCertificate, Resilience};
