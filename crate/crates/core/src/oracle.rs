//! Brute-force ground truth and seeded instance generators.
//!
//! Nothing here calls into the cut or search code. Existence of a chain
//! with a given boundary is decided by Gaussian elimination over F2, and
//! packings are found by exhaustive enumeration of edge subsets.

use std::collections::HashMap;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::{EdgeChain, VertexChain};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Terminals, VertexId};
use crate::packing::{odd_interior, AugmentPlan};

pub const VERTEX_BOUND: usize = 12;
pub const EDGE_BOUND: usize = 18;

pub type OracleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> OracleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityRule {
    /// Every non-terminal vertex ends with even degree.
    EvenInterior,
    Unconstrained,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TerminalPlacement {
    /// Terminals are vertices 0, 1, 2, 3.
    First,
    /// Four distinct vertices in random order.
    Random,
}

/// Parameters for [`gen_instance`]. Edge bounds apply to the random part;
/// parity repair may add edges but never exceeds `max_edges`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    pub vertices: usize,
    pub min_edges: usize,
    pub max_edges: usize,
    pub placement: TerminalPlacement,
    pub parity: ParityRule,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(vertices: usize, max_edges: usize, parity: ParityRule, seed: u64) -> Self {
        InstanceSpec {
            vertices,
            min_edges: 0,
            max_edges,
            placement: TerminalPlacement::Random,
            parity,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.vertices < 4 {
            return Err(Error::SpecInvalid(format!(
                "{} vertices cannot hold four terminals",
                self.vertices
            )));
        }
        if self.vertices > VERTEX_BOUND {
            return Err(Error::SpecInvalid(format!(
                "{} vertices exceeds {VERTEX_BOUND}",
                self.vertices
            )));
        }
        if self.max_edges > EDGE_BOUND {
            return Err(Error::SpecInvalid(format!(
                "{} edges exceeds {EDGE_BOUND}",
                self.max_edges
            )));
        }
        if self.min_edges > self.max_edges {
            return Err(Error::SpecInvalid(format!(
                "min_edges {} above max_edges {}",
                self.min_edges, self.max_edges
            )));
        }
        Ok(())
    }
}

fn random_pair(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let u = rng.gen_range(0..n);
    let mut w = rng.gen_range(0..n - 1);
    if w >= u {
        w += 1;
    }
    (u, w)
}

/// Deterministic in `spec.seed`.
pub fn gen_instance(spec: &InstanceSpec) -> Result<(MultiGraph, Terminals)> {
    spec.validate()?;
    let mut rng = rng(spec.seed);
    let n = spec.vertices;
    let mut ids: Vec<usize> = (0..n).collect();
    if spec.placement == TerminalPlacement::Random {
        ids.shuffle(&mut rng);
    }
    let t = Terminals::from_indices([ids[0], ids[1], ids[2], ids[3]])?;
    let is_terminal = |v: usize| ids[..4].contains(&v);

    let m = rng.gen_range(spec.min_edges..=spec.max_edges);
    let mut edges: Vec<(usize, usize)> = (0..m).map(|_| random_pair(&mut rng, n)).collect();

    if spec.parity == ParityRule::EvenInterior {
        loop {
            let mut deg = vec![0usize; n];
            for &(u, w) in &edges {
                deg[u] += 1;
                deg[w] += 1;
            }
            let mut odd: Vec<usize> = (0..n).filter(|&v| !is_terminal(v) && deg[v] % 2 == 1).collect();
            odd.shuffle(&mut rng);
            let mut repair = Vec::new();
            while let Some(y) = odd.pop() {
                if !odd.is_empty() && rng.gen_bool(0.5) {
                    repair.push((y, odd.pop().expect("nonempty")));
                } else {
                    repair.push((y, ids[rng.gen_range(0..4)]));
                }
            }
            if edges.len() + repair.len() <= spec.max_edges {
                edges.extend(repair);
                break;
            }
            edges.pop();
        }
    }

    let mut g = MultiGraph::with_vertices(n);
    for (u, w) in edges {
        g.add_edge(VertexId::new(u), VertexId::new(w))?;
    }
    Ok((g, t))
}

/// Live edges packed into dense bit positions.
struct Dense {
    ids: Vec<EdgeId>,
    ends: Vec<u64>,
}

impl Dense {
    fn new(g: &MultiGraph) -> Result<Self> {
        if g.edge_count() > EDGE_BOUND {
            return Err(Error::TooLarge {
                size: g.edge_count(),
                bound: EDGE_BOUND,
            });
        }
        if g.vertex_count() > 64 {
            return Err(Error::TooLarge {
                size: g.vertex_count(),
                bound: 64,
            });
        }
        let (ids, ends) = g
            .edges()
            .map(|(e, u, w)| (e, (1u64 << u.index()) | (1u64 << w.index())))
            .unzip();
        Ok(Dense { ids, ends })
    }

    fn len(&self) -> usize {
        self.ids.len()
    }

    fn boundary(&self, mask: u32) -> u64 {
        (0..self.len())
            .filter(|&i| mask & (1 << i) != 0)
            .fold(0, |acc, i| acc ^ self.ends[i])
    }

    /// Whether `target` is the boundary of some subset of `mask`.
    fn spans(&self, mask: u32, target: u64) -> bool {
        // xor basis keyed by highest set bit
        let mut basis = [0u64; 64];
        for i in (0..self.len()).filter(|&i| mask & (1 << i) != 0) {
            let mut x = self.ends[i];
            while x != 0 {
                let h = 63 - x.leading_zeros() as usize;
                if basis[h] == 0 {
                    basis[h] = x;
                    break;
                }
                x ^= basis[h];
            }
        }
        let mut x = target;
        while x != 0 {
            let h = 63 - x.leading_zeros() as usize;
            if basis[h] == 0 {
                return false;
            }
            x ^= basis[h];
        }
        true
    }

    fn is_forest(&self, mask: u32, n: usize) -> bool {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for i in (0..self.len()).filter(|&i| mask & (1 << i) != 0) {
            let u = self.ends[i].trailing_zeros() as usize;
            let w = 63 - self.ends[i].leading_zeros() as usize;
            let (a, b) = (find(&mut parent, u), find(&mut parent, w));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}

fn vertex_mask(targets: &VertexChain) -> u64 {
    targets.iter().fold(0, |acc, v| acc | (1u64 << v.index()))
}

/// A smallest edge set whose deletion leaves no chain with boundary
/// `targets`; the first one in (size, ids) order.
pub fn brute_separation(g: &MultiGraph, targets: &VertexChain) -> Result<Vec<EdgeId>> {
    let dense = Dense::new(g)?;
    for v in targets.iter() {
        g.check_vertex(v)?;
    }
    let target = vertex_mask(targets);
    let full: u32 = if dense.len() == 32 {
        u32::MAX
    } else {
        (1 << dense.len()) - 1
    };
    for size in 0..=dense.len() {
        for del in (0..dense.len()).combinations(size) {
            let mask = del.iter().fold(full, |m, &i| m & !(1 << i));
            if !dense.spans(mask, target) {
                return Ok(del.into_iter().map(|i| dense.ids[i]).collect());
            }
        }
    }
    unreachable!("deleting every edge leaves only the zero boundary")
}

pub fn brute_resilience(g: &MultiGraph, t: &Terminals) -> Result<usize> {
    brute_separation(g, &VertexChain::from_terminals(t)).map(|d| d.len())
}

/// Maximum number of pairwise disjoint chains with boundary `targets`.
pub fn brute_max_packing_for(g: &MultiGraph, targets: &VertexChain) -> Result<usize> {
    let dense = Dense::new(g)?;
    for v in targets.iter() {
        g.check_vertex(v)?;
    }
    let target = vertex_mask(targets);
    if target == 0 {
        return Err(Error::BadBoundary {
            expected: "a nonzero boundary".into(),
            found: "0".into(),
        });
    }
    let m = dense.len();
    let n = g.vertex_count();
    let mut by_edge: Vec<Vec<u32>> = vec![Vec::new(); m];
    for mask in 1u32..(1u32 << m) {
        if dense.boundary(mask) == target && dense.is_forest(mask, n) {
            for (i, list) in by_edge.iter_mut().enumerate() {
                if mask & (1 << i) != 0 {
                    list.push(mask);
                }
            }
        }
    }
    let mut memo = HashMap::new();
    Ok(best_family(&by_edge, (1u32 << m) - 1, &mut memo))
}

fn best_family(by_edge: &[Vec<u32>], avail: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if avail == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&avail) {
        return v;
    }
    let e = avail.trailing_zeros() as usize;
    let mut best = best_family(by_edge, avail & !(1 << e), memo);
    for &c in &by_edge[e] {
        if c & !avail == 0 {
            best = best.max(1 + best_family(by_edge, avail & !c, memo));
        }
    }
    memo.insert(avail, best);
    best
}

pub fn brute_max_packing(g: &MultiGraph, t: &Terminals) -> Result<usize> {
    brute_max_packing_for(g, &VertexChain::from_terminals(t))
}

/// Random terminal-only multigraph on four vertices.
pub fn gen_quad(rng: &mut impl Rng, max_edges: usize) -> (MultiGraph, Terminals) {
    let mut g = MultiGraph::with_vertices(4);
    for _ in 0..rng.gen_range(0..=max_edges) {
        let (u, w) = random_pair(rng, 4);
        g.add_edge(VertexId::new(u), VertexId::new(w)).expect("distinct");
    }
    (g, Terminals::from_indices([0, 1, 2, 3]).expect("distinct"))
}

/// Random graph where every edge touches a terminal and every interior
/// vertex is even and balanced. Interior edges come in pairs to two
/// distinct terminals, which guarantees both conditions.
pub fn gen_star(
    rng: &mut impl Rng,
    interior: usize,
    max_pairs: usize,
    max_quad_edges: usize,
) -> (MultiGraph, Terminals) {
    let (mut g, t) = gen_quad(rng, max_quad_edges);
    for _ in 0..interior {
        let y = g.add_vertex();
        for _ in 0..rng.gen_range(0..=max_pairs) {
            let (i, j) = random_pair(rng, 4);
            g.add_edge(y, t.get(i)).expect("distinct");
            g.add_edge(y, t.get(j)).expect("distinct");
        }
    }
    (g, t)
}

/// Every plan covering the odd interior vertices, in a fixed order.
pub fn all_plans(g: &MultiGraph, t: &Terminals) -> Result<Vec<AugmentPlan>> {
    fn go(left: &[VertexId], t: &Terminals, acc: &mut Vec<(VertexId, VertexId)>, out: &mut Vec<AugmentPlan>) {
        let Some((&x, rest)) = left.split_first() else {
            out.push(AugmentPlan::new(acc.clone()));
            return;
        };
        for i in 0..rest.len() {
            let mut remaining = rest.to_vec();
            let y = remaining.remove(i);
            acc.push((x, y));
            go(&remaining, t, acc, out);
            acc.pop();
        }
        for v in t.iter() {
            acc.push((x, v));
            go(rest, t, acc, out);
            acc.pop();
        }
    }
    let odd: Vec<VertexId> = odd_interior(g, t)?.into_iter().collect();
    let mut out = Vec::new();
    go(&odd, t, &mut Vec::new(), &mut out);
    Ok(out)
}

pub fn random_plan(rng: &mut impl Rng, g: &MultiGraph, t: &Terminals) -> Result<AugmentPlan> {
    let mut odd: Vec<VertexId> = odd_interior(g, t)?.into_iter().collect();
    odd.shuffle(rng);
    let mut edges = Vec::new();
    while let Some(y) = odd.pop() {
        if !odd.is_empty() && rng.gen_bool(0.5) {
            edges.push((y, odd.pop().expect("nonempty")));
        } else {
            edges.push((y, t.get(rng.gen_range(0..4))));
        }
    }
    Ok(AugmentPlan::new(edges))
}

/// Random multigraph with `n` vertices and up to `max_edges` edges.
pub fn gen_graph(rng: &mut impl Rng, n: usize, max_edges: usize) -> MultiGraph {
    let mut g = MultiGraph::with_vertices(n);
    for _ in 0..rng.gen_range(0..=max_edges) {
        let (u, w) = random_pair(rng, n);
        g.add_edge(VertexId::new(u), VertexId::new(w)).expect("distinct");
    }
    g
}

/// Edges of a random walk of up to `steps` steps; returns the chain of
/// edges used an odd number of times and the end vertex.
fn random_walk(rng: &mut impl Rng, g: &MultiGraph, start: VertexId, steps: usize) -> (EdgeChain, VertexId) {
    let mut chain = EdgeChain::zero();
    let mut at = start;
    for _ in 0..steps {
        let inc = g.incident(at).expect("known vertex");
        let Some(&e) = inc.choose(rng) else { break };
        chain.toggle(e);
        at = g.opposite(e, at).expect("incident");
    }
    (chain, at)
}

/// Random homological cycle: a random edge set corrected by a forest
/// join of its own boundary.
pub fn random_cycle(rng: &mut impl Rng, g: &MultiGraph) -> EdgeChain {
    let mut c: EdgeChain = g.edge_ids().filter(|_| rng.gen_bool(0.5)).collect();
    let mut deg = vec![false; g.vertex_count()];
    for e in c.iter() {
        let (u, w) = g.endpoints(e).expect("live");
        deg[u.index()] ^= true;
        deg[w.index()] ^= true;
    }
    // BFS forest; fix parity from the leaves up
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    let mut parent = vec![None; n];
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            let xv = VertexId::new(x);
            for &e in g.incident(xv).expect("known") {
                let y = g.opposite(e, xv).expect("incident").index();
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
    }
    for &v in order.iter().rev() {
        if deg[v] {
            let (p, e) = parent[v].expect("each component has even boundary");
            c.toggle(e);
            deg[v] = false;
            deg[p] ^= true;
        }
    }
    c
}

/// Random chain whose boundary has between 2 and `2 * max_pairs`
/// vertices, or `None` if the graph is too sparse to produce one quickly.
pub fn random_chain(rng: &mut impl Rng, g: &MultiGraph, max_pairs: usize) -> Option<EdgeChain> {
    for _ in 0..64 {
        let mut c = random_cycle(rng, g);
        for _ in 0..rng.gen_range(1..=max_pairs) {
            let start = VertexId::new(rng.gen_range(0..g.vertex_count()));
            let steps = rng.gen_range(1..=6);
            let (walk, _) = random_walk(rng, g, start, steps);
            c = &c + &walk;
        }
        let b = crate::chain::boundary(g, &c).expect("live edges");
        if !b.is_empty() && b.len() <= 2 * max_pairs {
            return Some(c);
        }
    }
    None
}
