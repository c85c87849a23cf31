use proptest::prelude::*;

use menger4::packing::{augment_odd, odd_interior, OddVertexProfile};
use menger4::{
    boundary, max_packing, oracle, pack_complete_quad, pack_star, resilience, EdgeChain, EdgeId, MultiGraph,
    Terminals, VertexChain, VertexId,
};

fn graph_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (4..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 1..n), 0..=max_m).prop_map(move |pairs| {
            let mut g = MultiGraph::with_vertices(n);
            for (u, d) in pairs {
                g.add_edge(VertexId::new(u), VertexId::new((u + d) % n)).unwrap();
            }
            g
        })
    })
}

fn terminals() -> Terminals {
    Terminals::from_indices([0, 1, 2, 3]).unwrap()
}

fn chain_of(g: &MultiGraph, picks: &[bool]) -> EdgeChain {
    g.edge_ids()
        .zip(picks.iter().cycle())
        .filter(|(_, &b)| b)
        .map(|(e, _)| e)
        .collect()
}

/// Whether `target` is a sum of edge boundaries, by elimination over F2.
fn in_boundary_space(g: &MultiGraph, target: u64) -> bool {
    let mut basis: Vec<u64> = Vec::new();
    let reduce = |mut x: u64, basis: &[u64]| {
        for &b in basis {
            x = x.min(x ^ b);
        }
        x
    };
    for (_, u, w) in g.edges() {
        let x = reduce((1 << u.index()) | (1 << w.index()), &basis);
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    reduce(target, &basis) == 0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn handshake(g in graph_strategy(9, 20)) {
        let total: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn components_match_boundary_space(g in graph_strategy(8, 10)) {
        let labels = g.component_labels();
        for u in 0..g.vertex_count() {
            for w in u + 1..g.vertex_count() {
                let same = labels[u] == labels[w];
                prop_assert_eq!(same, in_boundary_space(&g, (1 << u) | (1 << w)));
            }
        }
    }

    #[test]
    fn delete_then_readd_restores_degrees(g in graph_strategy(8, 14), picks in prop::collection::vec(any::<bool>(), 1..8)) {
        let d = chain_of(&g, &picks);
        let mut h = g.delete_edges(&d.to_vec()).unwrap();
        for e in d.iter() {
            let (u, w) = g.endpoints(e).unwrap();
            h.add_edge(u, w).unwrap();
        }
        for v in g.vertices() {
            prop_assert_eq!(g.degree(v).unwrap(), h.degree(v).unwrap());
        }
    }

    #[test]
    fn boundary_is_linear_and_even(
        g in graph_strategy(8, 16),
        a in prop::collection::vec(any::<bool>(), 1..8),
        b in prop::collection::vec(any::<bool>(), 1..8),
    ) {
        let (p, q) = (chain_of(&g, &a), chain_of(&g, &b));
        let sum = boundary(&g, &(&p + &q)).unwrap();
        let parts = &boundary(&g, &p).unwrap() + &boundary(&g, &q).unwrap();
        prop_assert_eq!(&sum, &parts);
        prop_assert_eq!(sum.len() % 2, 0);
    }

    #[test]
    fn balanced_odd_profiles_stay_balanced(counts in prop::array::uniform4(0usize..7), grow in any::<bool>(), which in 0usize..4) {
        let t = terminals();
        let p = OddVertexProfile::from_counts(VertexId::new(4), &t, counts);
        prop_assume!(p.total() % 2 == 1 && p.is_balanced());
        prop_assert!(p.counts.windows(2).all(|w| w[0] >= w[1]));
        if let Some(q) = p.adjusted(&t, t.get(which), grow) {
            prop_assert!(q.is_balanced(), "{:?} -> {:?}", p, q);
        }
    }

    #[test]
    fn augmentation_fixes_parity(g in graph_strategy(9, 14), seed in any::<u64>()) {
        let t = terminals();
        let plan = oracle::random_plan(&mut oracle::rng(seed), &g, &t).unwrap();
        let gn = augment_odd(&g, &t, &plan).unwrap();
        prop_assert!(odd_interior(&gn, &t).unwrap().is_empty());
        prop_assert_eq!(gn.edge_count(), g.edge_count() + plan.new_edges.len());
    }

    #[test]
    fn packing_is_valid_and_bounded(g in graph_strategy(8, 12)) {
        let t = terminals();
        let (k, p) = max_packing(&g, &t).unwrap();
        p.verify(&g).unwrap();
        prop_assert_eq!(k, p.len());
        for c in &p.chains {
            prop_assert!(c.iter().all(|e| g.contains_edge(e)));
        }
        let r = resilience(&g, &t).unwrap();
        prop_assert!(k <= r.k);
        prop_assert!(r.cert.verify(&g, &t).unwrap());
        prop_assert_eq!(r.cert.deleted.len(), r.k);
        if odd_interior(&g, &t).unwrap().is_empty() {
            prop_assert_eq!(k, r.k);
        }
    }

    #[test]
    fn quad_maximum_is_min_degree(seed in any::<u64>()) {
        let (g, t) = oracle::gen_quad(&mut oracle::rng(seed), 12);
        let k = t.iter().map(|v| g.degree(v).unwrap()).min().unwrap();
        let p = pack_complete_quad(&g, &t, k).unwrap();
        p.verify(&g).unwrap();
        prop_assert!(p.len() >= k);
        prop_assert_eq!(max_packing(&g, &t).unwrap().0, k);
    }

    #[test]
    fn star_packing_uses_original_edges(seed in any::<u64>()) {
        let (g, t) = oracle::gen_star(&mut oracle::rng(seed), 3, 3, 6);
        let k = t.iter().map(|v| g.degree(v).unwrap()).min().unwrap();
        let p = pack_star(&g, &t, k).unwrap();
        p.verify(&g).unwrap();
        prop_assert_eq!(p.len(), k);
        let used: Vec<EdgeId> = p.chains.iter().flat_map(|c| c.iter()).collect();
        prop_assert!(used.iter().all(|&e| g.contains_edge(e)));
        prop_assert_eq!(&p.target, &VertexChain::from_terminals(&t));
    }
}
