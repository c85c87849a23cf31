//! Packing on graphs whose edges all join two terminals.

use itertools::Itertools;

use crate::chain::{EdgeChain, VertexChain};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Terminals};

use super::Packing;

/// Slot of the unordered terminal pair `{i, j}` (positions 0..4).
fn pair_slot(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("not a pair of distinct terminal positions: ({i}, {j})"),
    }
}

/// Parallel-edge classes between terminal pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadProfile {
    /// Edge ids per unordered pair, ascending.
    groups: [Vec<EdgeId>; 6],
}

impl QuadProfile {
    /// Groups the terminal-to-terminal edges of `g`. Fails on any edge with
    /// a non-terminal endpoint.
    pub fn new(g: &MultiGraph, t: &Terminals) -> Result<Self> {
        t.check_in(g)?;
        let mut groups: [Vec<EdgeId>; 6] = Default::default();
        for (e, u, w) in g.edges() {
            match (t.position(u), t.position(w)) {
                (Some(i), Some(j)) => groups[pair_slot(i, j)].push(e),
                _ => return Err(Error::NotTerminalOnly(e)),
            }
        }
        Ok(QuadProfile { groups })
    }

    /// Number of edges between terminals at positions `i` and `j`.
    pub fn alpha(&self, i: usize, j: usize) -> usize {
        self.groups[pair_slot(i, j)].len()
    }

    pub fn edges(&self, i: usize, j: usize) -> &[EdgeId] {
        &self.groups[pair_slot(i, j)]
    }

    pub fn degree(&self, i: usize) -> usize {
        (0..4).filter(|&j| j != i).map(|j| self.alpha(i, j)).sum()
    }
}

/// The profile seen through a relabeling: position `i` of the view is
/// position `perm[i]` of the original terminals.
struct Relabeled<'a> {
    profile: &'a QuadProfile,
    perm: [usize; 4],
}

impl Relabeled<'_> {
    fn alpha(&self, i: usize, j: usize) -> usize {
        self.profile.alpha(self.perm[i - 1], self.perm[j - 1])
    }

    fn edge(&self, i: usize, j: usize, z: usize) -> EdgeId {
        self.profile.edges(self.perm[i - 1], self.perm[j - 1])[z - 1]
    }

    /// Two-edge chains from the three perfect matchings, then the count `m`
    /// of three-edge chains available after them.
    fn matching_chains(&self) -> (Vec<EdgeChain>, [usize; 3]) {
        let m1 = self.alpha(1, 2).min(self.alpha(3, 4));
        let m2 = self.alpha(1, 3).min(self.alpha(2, 4));
        let m3 = self.alpha(1, 4).min(self.alpha(2, 3));
        let mut chains = Vec::with_capacity(m1 + m2 + m3);
        for z in 1..=m1 {
            chains.push([self.edge(1, 2, z), self.edge(3, 4, z)].into_iter().collect());
        }
        for z in 1..=m2 {
            chains.push([self.edge(1, 3, z), self.edge(2, 4, z)].into_iter().collect());
        }
        for z in 1..=m3 {
            chains.push([self.edge(1, 4, z), self.edge(2, 3, z)].into_iter().collect());
        }
        (chains, [m1, m2, m3])
    }
}

/// At least `k` disjoint chains with boundary `v1 + v2 + v3 + v4` on a graph
/// whose every edge joins two terminals and whose terminal degrees are all
/// at least `k`.
///
/// First the opposite-pair matchings give `m1 + m2 + m3` two-edge chains.
/// If that falls short, the terminals are relabeled so that
/// `α(3,4) ≤ α(1,2)` and `α(2,4) ≤ α(1,3)`, and the surplus edges at `v1`
/// give `m` more chains of the form `e14 + e13 + e12`.
pub fn pack_complete_quad(g: &MultiGraph, t: &Terminals, k: usize) -> Result<Packing> {
    let profile = QuadProfile::new(g, t)?;
    let target = VertexChain::from_terminals(t);
    for i in 0..4 {
        let degree = profile.degree(i);
        if degree < k {
            return Err(Error::DegreeTooSmall {
                vertex: t.get(i),
                degree,
                k,
            });
        }
    }
    if k == 0 {
        return Ok(Packing::new(Vec::new(), target));
    }

    let identity = Relabeled {
        profile: &profile,
        perm: [0, 1, 2, 3],
    };
    let (chains, _) = identity.matching_chains();
    if chains.len() >= k {
        return Ok(Packing::new(chains, target));
    }

    let perm = (0..4)
        .permutations(4)
        .map(|p| [p[0], p[1], p[2], p[3]])
        .find(|&perm| {
            let r = Relabeled {
                profile: &profile,
                perm,
            };
            r.alpha(3, 4) <= r.alpha(1, 2) && r.alpha(2, 4) <= r.alpha(1, 3)
        })
        .expect("some terminal sits on the larger side of two matchings");
    let view = Relabeled {
        profile: &profile,
        perm,
    };
    let (mut chains, [m1, m2, m3]) = view.matching_chains();
    let m = (view.alpha(1, 4) - view.alpha(2, 3))
        .min(view.alpha(1, 2) - view.alpha(3, 4))
        .min(view.alpha(1, 3) - view.alpha(2, 4));
    for z in 1..=m {
        chains.push(
            [
                view.edge(1, 4, m3 + z),
                view.edge(1, 3, m2 + z),
                view.edge(1, 2, m1 + z),
            ]
            .into_iter()
            .collect(),
        );
    }
    debug_assert!(chains.len() >= k, "degree bound guarantees k chains");
    Ok(Packing::new(chains, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn quad(edges: &[(usize, usize)]) -> (MultiGraph, Terminals) {
        let mut g = MultiGraph::with_vertices(4);
        for &(a, b) in edges {
            g.add_edge(VertexId::new(a), VertexId::new(b)).unwrap();
        }
        (g, Terminals::from_indices([0, 1, 2, 3]).unwrap())
    }

    #[test]
    fn k4_gives_three_matchings() {
        let (g, t) = quad(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let p = pack_complete_quad(&g, &t, 3).unwrap();
        p.verify(&g).unwrap();
        let ids: Vec<Vec<usize>> = p
            .chains
            .iter()
            .map(|c| c.iter().map(|e| e.index()).collect())
            .collect();
        // e01+e23, e02+e13, e03+e12
        assert_eq!(ids, vec![vec![0, 5], vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn zero_k_is_empty() {
        let (g, t) = quad(&[]);
        assert!(pack_complete_quad(&g, &t, 0).unwrap().is_empty());
    }

    #[test]
    fn degree_precondition() {
        let (g, t) = quad(&[(0, 1), (0, 1)]);
        assert_eq!(
            pack_complete_quad(&g, &t, 1),
            Err(Error::DegreeTooSmall {
                vertex: VertexId::new(2),
                degree: 0,
                k: 1
            })
        );
    }

    #[test]
    fn non_terminal_edge_rejected() {
        let mut g = MultiGraph::with_vertices(5);
        g.add_edge(VertexId::new(0), VertexId::new(4)).unwrap();
        let t = Terminals::from_indices([0, 1, 2, 3]).unwrap();
        assert!(matches!(
            pack_complete_quad(&g, &t, 0),
            Err(Error::NotTerminalOnly(_))
        ));
    }

    #[test]
    fn star_at_v1_uses_three_edge_chain() {
        // only v1 has edges to the others: one chain e12+e13+e14
        let (g, t) = quad(&[(0, 1), (0, 2), (0, 3)]);
        let p = pack_complete_quad(&g, &t, 1).unwrap();
        p.verify(&g).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.chains[0].len(), 3);
    }

    #[test]
    fn relabeling_needed() {
        // the star sits at v3, so v3 must become the relabeled v1
        let (g, t) = quad(&[(2, 0), (2, 1), (2, 3), (2, 0), (2, 1), (2, 3)]);
        let p = pack_complete_quad(&g, &t, 2).unwrap();
        p.verify(&g).unwrap();
        assert_eq!(p.len(), 2);
    }
}
