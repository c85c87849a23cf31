//! Families of pairwise edge-disjoint chains with boundary
//! `v1 + v2 + v3 + v4`.

mod augment;
mod quad;
mod search;
mod star;

use std::collections::VecDeque;

use crate::chain::{boundary, EdgeChain, VertexChain};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Terminals};
use crate::realize::{pair_terminals, TerminalPairing};
use crate::resilience::resilience_value;

pub use augment::{augment_odd, odd_interior, AugmentPlan, OddVertexProfile};
pub use quad::{pack_complete_quad, QuadProfile};
pub use star::pack_star;

/// Pairwise edge-disjoint chains sharing the boundary `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub chains: Vec<EdgeChain>,
    pub target: VertexChain,
}

impl Packing {
    pub fn new(chains: Vec<EdgeChain>, target: VertexChain) -> Self {
        Packing { chains, target }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Checks disjointness and every chain's boundary against `g`.
    pub fn verify(&self, g: &MultiGraph) -> Result<()> {
        let mut used = EdgeChain::zero();
        for c in &self.chains {
            let b = boundary(g, c)?;
            if b != self.target {
                return Err(Error::BadBoundary {
                    expected: self.target.to_string(),
                    found: b.to_string(),
                });
            }
            if !used.is_disjoint(c) {
                return Err(Error::BadBoundary {
                    expected: "pairwise disjoint chains".into(),
                    found: format!("{c} overlaps an earlier chain"),
                });
            }
            used = &used + c;
        }
        Ok(())
    }
}

fn to_packing(raw: Vec<Vec<EdgeId>>, t: &Terminals) -> Packing {
    Packing::new(
        raw.into_iter().map(|c| c.into_iter().collect()).collect(),
        VertexChain::from_terminals(t),
    )
}

/// The largest number of pairwise disjoint chains with boundary
/// `v1 + v2 + v3 + v4`, with a witness family. Exact search, bounded above
/// by the resilience.
pub fn max_packing(g: &MultiGraph, t: &Terminals) -> Result<(usize, Packing)> {
    t.check_in(g)?;
    let p = to_packing(search::search_packing(g, t, None), t);
    Ok((p.len(), p))
}

/// Some `k` disjoint chains, if they exist. Stops as soon as `k` are found.
pub fn find_packing(g: &MultiGraph, t: &Terminals, k: usize) -> Result<Option<Packing>> {
    t.check_in(g)?;
    let p = to_packing(search::search_packing(g, t, Some(k)), t);
    Ok((p.len() >= k).then_some(p))
}

/// Bound on the cycle-space dimension `theorem6_check` will enumerate.
pub const PARITY_SEARCH_LIMIT: usize = 22;

/// Spanning forest data for enumerating edge sets with prescribed
/// odd-degree vertices.
struct Forest {
    /// (parent, edge to parent) per vertex; roots have none.
    parent: Vec<Option<(usize, EdgeId)>>,
    /// Vertices in BFS order, roots first.
    order: Vec<usize>,
    fundamental: Vec<EdgeChain>,
}

impl Forest {
    fn new(g: &MultiGraph) -> Forest {
        let n = g.vertex_count();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut tree_edge = vec![false; g.edge_bound()];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                let xv = crate::graph::VertexId::new(x);
                for &e in g.incident(xv).expect("known vertex") {
                    let y = g.opposite(e, xv).expect("incident").index();
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, e));
                        tree_edge[e.index()] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        let path_to_root = |mut v: usize| {
            let mut c = EdgeChain::zero();
            while let Some((p, e)) = parent[v] {
                c.toggle(e);
                v = p;
            }
            c
        };
        let fundamental = g
            .edges()
            .filter(|(e, _, _)| !tree_edge[e.index()])
            .map(|(e, u, w)| {
                let mut c = &path_to_root(u.index()) + &path_to_root(w.index());
                c.toggle(e);
                c
            })
            .collect();
        Forest {
            parent,
            order,
            fundamental,
        }
    }

    /// Tree edges whose odd-degree vertices are exactly `odd`, if every
    /// component holds an even number of them.
    fn join(&self, odd: &[bool]) -> Option<EdgeChain> {
        let mut need = odd.to_vec();
        let mut out = EdgeChain::zero();
        for &v in self.order.iter().rev() {
            if !need[v] {
                continue;
            }
            match self.parent[v] {
                Some((p, e)) => {
                    out.toggle(e);
                    need[v] = false;
                    need[p] = !need[p];
                }
                None => return None,
            }
        }
        Some(out)
    }
}

/// Edge sets `D` after whose deletion every interior vertex has even
/// degree, ordered by size and then by edge ids.
pub fn parity_fixing_deletions(g: &MultiGraph, t: &Terminals) -> Result<Vec<Vec<EdgeId>>> {
    t.check_in(g)?;
    let forest = Forest::new(g);
    let dim = forest.fundamental.len();
    if dim > PARITY_SEARCH_LIMIT {
        return Err(Error::TooLarge {
            size: dim,
            bound: PARITY_SEARCH_LIMIT,
        });
    }
    let odd = odd_interior(g, t)?;
    let mut out = Vec::new();
    // D's odd vertices: all odd interior vertices plus any terminal subset
    for terminal_mask in 0u32..16 {
        let mut want = vec![false; g.vertex_count()];
        for y in &odd {
            want[y.index()] = true;
        }
        for i in 0..4 {
            if terminal_mask & (1 << i) != 0 {
                want[t.get(i).index()] = true;
            }
        }
        let Some(base) = forest.join(&want) else {
            continue;
        };
        for combo in 0u64..(1u64 << dim) {
            let mut d = base.clone();
            for (i, cyc) in forest.fundamental.iter().enumerate() {
                if combo & (1 << i) != 0 {
                    d = &d + cyc;
                }
            }
            out.push(d.to_vec());
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Whether some deletion `D` makes every interior degree even while
/// keeping resilience at least `k`; returns the first such `D` in
/// (size, ids) order. `k = 0` holds vacuously with `D` empty.
pub fn theorem6_check(g: &MultiGraph, t: &Terminals, k: usize) -> Result<(bool, Vec<EdgeId>)> {
    t.check_in(g)?;
    if k == 0 {
        return Ok((true, Vec::new()));
    }
    for d in parity_fixing_deletions(g, t)? {
        let mut active = search::full_mask(g);
        for e in &d {
            active.set(e.index(), false);
        }
        if resilience_value(g, Some(&active), t) >= k {
            return Ok((true, d));
        }
    }
    Ok((false, Vec::new()))
}

/// True when deleting `d` leaves every interior degree even and
/// resilience at least `k`.
pub fn is_parity_witness(g: &MultiGraph, t: &Terminals, d: &[EdgeId], k: usize) -> Result<bool> {
    let h = g.delete_edges(d)?;
    if !odd_interior(&h, t)?.is_empty() {
        return Ok(false);
    }
    Ok(crate::resilience::resilience(&h, t)?.k >= k)
}

/// `k` splits of the four terminals into two pairs, each realized by two
/// edge-disjoint paths, with all `2k` paths pairwise edge-disjoint.
pub fn paths_packing(g: &MultiGraph, t: &Terminals, k: usize) -> Result<Vec<TerminalPairing>> {
    if k == 0 {
        t.check_in(g)?;
        return Ok(Vec::new());
    }
    let Some(packing) = find_packing(g, t, k)? else {
        let (maximum, _) = max_packing(g, t)?;
        return Err(Error::InsufficientPacking {
            requested: k,
            maximum,
        });
    };
    packing
        .chains
        .iter()
        .take(k)
        .map(|c| pair_terminals(g, c, &packing.target))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture::{self, *};

    #[test]
    fn counterexample_maximum_is_one() {
        let (g, t) = fixture::counterexample();
        let (k, p) = max_packing(&g, &t).unwrap();
        assert_eq!(k, 1);
        p.verify(&g).unwrap();
    }

    #[test]
    fn augmented_counterexample_packs_two() {
        let (g, t) = fixture::counterexample();
        let gn = augment_odd(&g, &t, &AugmentPlan::new(vec![(Y1, Y2)])).unwrap();
        let (k, p) = max_packing(&gn, &t).unwrap();
        assert_eq!(k, 2);
        p.verify(&gn).unwrap();

        // hand-built pairs also verify
        let eps = EdgeId::new(7);
        let pairs: [(&[EdgeId], &[EdgeId]); 3] = [
            (&[G, E2, E3], &[E1, eps, H3, H1, H2]),
            (&[G, H1, H2], &[E2, eps, H3, E1, E3]),
            (&[G, E2, eps, H2], &[E1, E3, H1, H3]),
        ];
        for (a, b) in pairs {
            let manual = Packing::new(
                vec![a.iter().copied().collect(), b.iter().copied().collect()],
                VertexChain::from_terminals(&t),
            );
            manual.verify(&gn).unwrap();
        }
    }

    #[test]
    fn terminal_plans_fit_star_construction() {
        let (g, t) = fixture::counterexample();
        for a in t.iter() {
            for b in t.iter() {
                let plan = AugmentPlan::new(vec![(Y1, a), (Y2, b)]);
                let gn = augment_odd(&g, &t, &plan).unwrap();
                let p = pack_star(&gn, &t, 2).unwrap();
                assert_eq!(p.len(), 2, "{plan}");
                p.verify(&gn).unwrap();
            }
        }
    }

    #[test]
    fn edgeless_packs_nothing() {
        let g = MultiGraph::with_vertices(4);
        let t = Terminals::from_indices([0, 1, 2, 3]).unwrap();
        let (k, p) = max_packing(&g, &t).unwrap();
        assert_eq!(k, 0);
        assert!(p.is_empty());
    }

    #[test]
    fn check6_on_counterexample() {
        let (g, t) = fixture::counterexample();
        assert_eq!(theorem6_check(&g, &t, 0).unwrap(), (true, vec![]));
        assert!(!theorem6_check(&g, &t, 2).unwrap().0);
        let (ok, d) = theorem6_check(&g, &t, 1).unwrap();
        assert!(ok);
        assert!(is_parity_witness(&g, &t, &d, 1).unwrap());
        // deleting everything outside g + e2 + e3 also witnesses k = 1
        assert!(is_parity_witness(&g, &t, &[E1, H1, H2, H3], 1).unwrap());
    }

    #[test]
    fn paths_on_counterexample() {
        let (g, t) = fixture::counterexample();
        assert!(paths_packing(&g, &t, 0).unwrap().is_empty());
        let splits = paths_packing(&g, &t, 1).unwrap();
        assert_eq!(splits.len(), 1);
        assert_eq!(splits[0].paths.len(), 2);
        assert_eq!(splits[0].endpoints(), VertexChain::from_terminals(&t));
        assert_eq!(
            paths_packing(&g, &t, 2),
            Err(Error::InsufficientPacking {
                requested: 2,
                maximum: 1
            })
        );
    }
}
