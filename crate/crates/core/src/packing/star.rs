//! Packing on graphs where every edge touches a terminal.
//!
//! Interior vertices are eliminated one at a time. Each round replaces
//! pairs of edges `y-vi`, `y-vj` by one synthetic edge `vi-vj`, which keeps
//! terminal degrees unchanged. Once no interior vertex has edges left the
//! graph is terminal-only and `pack_complete_quad` applies; synthetic edges
//! in its chains are then replaced by their two original edges.

use crate::chain::EdgeChain;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Terminals, VertexId};

use super::augment::OddVertexProfile;
use super::quad::pack_complete_quad;
use super::Packing;

struct Reduction<'a> {
    work: MultiGraph,
    t: &'a Terminals,
    /// Pre-images of synthetic edges, indexed by `id - first_synthetic`.
    preimage: Vec<[EdgeId; 2]>,
    first_synthetic: usize,
}

impl Reduction<'_> {
    fn rewire(&mut self, a: EdgeId, b: EdgeId, x: VertexId, z: VertexId) -> Result<()> {
        self.work.remove_edge(a)?;
        self.work.remove_edge(b)?;
        let h = self.work.add_edge(x, z)?;
        debug_assert_eq!(h.index(), self.first_synthetic + self.preimage.len());
        self.preimage.push([a, b]);
        Ok(())
    }

    /// Edges from `y` to each terminal, ascending.
    fn lists(&self, y: VertexId) -> Result<[Vec<EdgeId>; 4]> {
        let mut lists: [Vec<EdgeId>; 4] = Default::default();
        for &e in self.work.incident(y)? {
            let w = self.work.opposite(e, y)?;
            let i = self.t.position(w).ok_or(Error::EdgeMissesTerminal(e))?;
            lists[i].push(e);
        }
        Ok(lists)
    }

    fn violated(&self, y: VertexId, lists: &[Vec<EdgeId>; 4], i: usize) -> Error {
        Error::BalanceViolated {
            vertex: y,
            terminal: self.t.get(i),
            count: lists[i].len(),
        }
    }

    /// Removes every edge at `y`, dispatching on how many terminals it sees.
    fn eliminate(&mut self, y: VertexId) -> Result<()> {
        loop {
            let lists = self.lists(y)?;
            let mut present: Vec<usize> = (0..4).filter(|&i| !lists[i].is_empty()).collect();
            // re-index by decreasing count, ties by terminal position
            present.sort_by_key(|&i| (std::cmp::Reverse(lists[i].len()), i));
            let t = self.t;
            let v = |i: usize| t.get(i);
            match present.as_slice() {
                // Case 1: nothing left at y
                [] => return Ok(()),
                // Case 2: all edges go to one terminal
                &[i] => return Err(self.violated(y, &lists, i)),
                // Case 3: two terminals with equal counts
                &[i, j] => {
                    if lists[i].len() != lists[j].len() {
                        return Err(self.violated(y, &lists, i));
                    }
                    let (lo, hi) = (i.min(j), i.max(j));
                    for (&a, &b) in lists[lo].iter().zip(&lists[hi]) {
                        self.rewire(a, b, v(lo), v(hi))?;
                    }
                    return Ok(());
                }
                // Case 4: three terminals, n1 >= n2 >= n3 > 0
                &[i1, i2, i3] => {
                    let (e1, e2, e3) = (&lists[i1], &lists[i2], &lists[i3]);
                    let (n1, n2, n3) = (e1.len(), e2.len(), e3.len());
                    if n1 > n2 + n3 {
                        return Err(self.violated(y, &lists, i1));
                    }
                    if n1 < n2 + n3 {
                        // Subcase 1: join the last s edges of e2 and e3
                        let s = (n2 + n3 - n1) / 2;
                        for z in 0..s {
                            self.rewire(e2[n2 - s + z], e3[n3 - s + z], v(i2), v(i3))?;
                        }
                        continue;
                    }
                    // Subcase 2: n1 = n2 + n3
                    for z in 0..n2 {
                        self.rewire(e1[n3 + z], e2[z], v(i1), v(i2))?;
                    }
                    for z in 0..n3 {
                        self.rewire(e1[z], e3[z], v(i1), v(i3))?;
                    }
                    return Ok(());
                }
                // Case 5: all four terminals, n1 >= n2 >= n3 >= n4 > 0
                &[i1, i2, i3, i4] => {
                    let (e1, e2, e3, e4) = (&lists[i1], &lists[i2], &lists[i3], &lists[i4]);
                    let (n1, n2, n3, n4) = (e1.len(), e2.len(), e3.len(), e4.len());
                    let rest = n2 + n3 + n4;
                    if n1 > rest {
                        return Err(self.violated(y, &lists, i1));
                    }
                    if n1 < rest {
                        // Subcase 1: join the last s edges of e3 and e4
                        let s = ((rest - n1) / 2).min(n4);
                        for z in 0..s {
                            self.rewire(e3[n3 - s + z], e4[n4 - s + z], v(i3), v(i4))?;
                        }
                        continue;
                    }
                    // Subcase 2: n1 = n2 + n3 + n4
                    for z in 0..n2 {
                        self.rewire(e1[n4 + n3 + z], e2[z], v(i1), v(i2))?;
                    }
                    for z in 0..n3 {
                        self.rewire(e1[n4 + z], e3[z], v(i1), v(i3))?;
                    }
                    for z in 0..n4 {
                        self.rewire(e1[z], e4[z], v(i1), v(i4))?;
                    }
                    return Ok(());
                }
                _ => unreachable!("at most four terminals"),
            }
        }
    }

    fn substitute_back(&self, chain: &EdgeChain) -> EdgeChain {
        let mut out = EdgeChain::zero();
        for e in chain.iter() {
            if e.index() >= self.first_synthetic {
                for x in self.preimage[e.index() - self.first_synthetic] {
                    out.toggle(x);
                }
            } else {
                out.toggle(e);
            }
        }
        out
    }
}

fn check_star(g: &MultiGraph, t: &Terminals, k: usize) -> Result<()> {
    t.check_in(g)?;
    for (e, u, w) in g.edges() {
        if !t.contains(u) && !t.contains(w) {
            return Err(Error::EdgeMissesTerminal(e));
        }
    }
    for v in t.iter() {
        let degree = g.degree(v)?;
        if degree < k {
            return Err(Error::DegreeTooSmall { vertex: v, degree, k });
        }
    }
    for y in g.vertices().filter(|&y| !t.contains(y)) {
        if g.degree(y)? % 2 == 1 {
            return Err(Error::OddInteriorDegree(y));
        }
    }
    for y in g.vertices().filter(|&y| !t.contains(y)) {
        let profile = OddVertexProfile::of(g, t, y)?;
        if !profile.is_balanced() {
            return Err(Error::BalanceViolated {
                vertex: y,
                terminal: profile.order[0],
                count: profile.counts[0],
            });
        }
    }
    Ok(())
}

/// `k` disjoint chains with boundary `v1 + v2 + v3 + v4` on a graph where
/// every edge touches a terminal, every interior vertex has even degree and
/// no interior vertex sends more than half its edges to one terminal.
pub fn pack_star(g: &MultiGraph, t: &Terminals, k: usize) -> Result<Packing> {
    check_star(g, t, k)?;
    let mut red = Reduction {
        work: g.clone(),
        t,
        preimage: Vec::new(),
        first_synthetic: g.edge_bound(),
    };
    for y in g.vertices().filter(|&y| !t.contains(y)) {
        red.eliminate(y)?;
    }
    let reduced = pack_complete_quad(&red.work, t, k)?;
    let chains = reduced
        .chains
        .iter()
        .take(k)
        .map(|c| red.substitute_back(c))
        .collect();
    Ok(Packing::new(chains, reduced.target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    fn star(n: usize, edges: &[(usize, usize)]) -> (MultiGraph, Terminals) {
        let mut g = MultiGraph::with_vertices(n);
        for &(a, b) in edges {
            g.add_edge(v(a), v(b)).unwrap();
        }
        (g, Terminals::from_indices([0, 1, 2, 3]).unwrap())
    }

    #[test]
    fn empty_interior_delegates() {
        let (g, t) = star(4, &[(0, 1), (2, 3)]);
        let p = pack_star(&g, &t, 1).unwrap();
        assert_eq!(p, pack_complete_quad(&g, &t, 1).unwrap());
    }

    #[test]
    fn case3_substitutes_two_edges() {
        // y=4 joins v1 and v2; plus v3-v4
        let (g, t) = star(5, &[(4, 0), (4, 1), (2, 3)]);
        let p = pack_star(&g, &t, 1).unwrap();
        p.verify(&g).unwrap();
        assert_eq!(p.len(), 1);
        let ids: Vec<usize> = p.chains[0].iter().map(|e| e.index()).collect();
        assert_eq!(ids, vec![0, 1, 2]);
    }

    #[test]
    fn counterexample_has_odd_interior() {
        let (g, t) = fixture::counterexample();
        assert_eq!(pack_star(&g, &t, 2), Err(Error::OddInteriorDegree(fixture::Y1)));
    }

    #[test]
    fn unbalanced_vertex_rejected() {
        let (g, t) = star(5, &[(4, 0), (4, 0), (0, 1), (2, 3)]);
        assert!(matches!(pack_star(&g, &t, 1), Err(Error::BalanceViolated { .. })));
    }

    #[test]
    fn interior_edge_rejected() {
        let (g, t) = star(6, &[(4, 5)]);
        assert!(matches!(pack_star(&g, &t, 0), Err(Error::EdgeMissesTerminal(_))));
    }

    #[test]
    fn case5_both_subcases() {
        // y sees all four terminals: counts 3,1,1,1 (subcase 2) and 2,2,2,2 (subcase 1)
        let (g, t) = star(
            6,
            &[
                (4, 0),
                (4, 0),
                (4, 0),
                (4, 1),
                (4, 2),
                (4, 3),
                (5, 0),
                (5, 0),
                (5, 1),
                (5, 1),
                (5, 2),
                (5, 2),
                (5, 3),
                (5, 3),
            ],
        );
        let k = t.iter().map(|x| g.degree(x).unwrap()).min().unwrap();
        assert_eq!(k, 3);
        let p = pack_star(&g, &t, k).unwrap();
        p.verify(&g).unwrap();
        assert_eq!(p.len(), k);
    }

    #[test]
    fn case4_subcase1() {
        // y sends two edges to each of v1, v2, v3; v4 hangs off v1 and v2
        let (g, t) = star(
            5,
            &[(4, 0), (4, 0), (4, 1), (4, 1), (4, 2), (4, 2), (3, 0), (3, 1)],
        );
        let p = pack_star(&g, &t, 2).unwrap();
        p.verify(&g).unwrap();
        assert_eq!(p.len(), 2);
    }
}
