//! Parity repair: one new edge per odd-degree interior vertex.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Terminals, VertexId};

/// Edge counts from an interior vertex `y` to the four terminals, sorted
/// in decreasing order together with the terminals inducing that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddVertexProfile {
    pub vertex: VertexId,
    /// Terminals ordered by decreasing count; ties keep terminal order.
    pub order: [VertexId; 4],
    pub counts: [usize; 4],
}

impl OddVertexProfile {
    pub fn of(g: &MultiGraph, t: &Terminals, y: VertexId) -> Result<Self> {
        let mut per_terminal = [0usize; 4];
        for &e in g.incident(y)? {
            if let Some(i) = t.position(g.opposite(e, y)?) {
                per_terminal[i] += 1;
            }
        }
        Ok(Self::from_counts(y, t, per_terminal))
    }

    /// `per_terminal[i]` is the number of edges between `y` and `t[i]`.
    pub fn from_counts(y: VertexId, t: &Terminals, per_terminal: [usize; 4]) -> Self {
        let mut idx = [0, 1, 2, 3];
        idx.sort_by_key(|&i| (std::cmp::Reverse(per_terminal[i]), i));
        OddVertexProfile {
            vertex: y,
            order: idx.map(|i| t.get(i)),
            counts: idx.map(|i| per_terminal[i]),
        }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// No terminal receives more than the other three combined.
    pub fn is_balanced(&self) -> bool {
        self.counts[0] <= self.counts[1] + self.counts[2] + self.counts[3]
    }

    fn per_terminal(&self, t: &Terminals) -> [usize; 4] {
        let mut out = [0; 4];
        for (v, c) in self.order.iter().zip(self.counts) {
            out[t.position(*v).expect("profile terminals")] = c;
        }
        out
    }

    /// The profile after adding (`grow = true`) or removing one edge
    /// between `y` and `terminal`, re-sorted.
    pub fn adjusted(&self, t: &Terminals, terminal: VertexId, grow: bool) -> Option<Self> {
        let mut counts = self.per_terminal(t);
        let i = t.position(terminal)?;
        if grow {
            counts[i] += 1;
        } else {
            counts[i] = counts[i].checked_sub(1)?;
        }
        Some(Self::from_counts(self.vertex, t, counts))
    }
}

/// New edges to draw; every odd-degree interior vertex must appear in
/// exactly one of them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AugmentPlan {
    pub new_edges: Vec<(VertexId, VertexId)>,
}

impl AugmentPlan {
    pub fn new(new_edges: Vec<(VertexId, VertexId)>) -> Self {
        AugmentPlan { new_edges }
    }

    pub fn validate(&self, g: &MultiGraph, t: &Terminals) -> Result<()> {
        t.check_in(g)?;
        let odd = odd_interior(g, t)?;
        let mut covered = BTreeSet::new();
        for &(a, b) in &self.new_edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(Error::PlanInvalid(format!("{a}-{b} is a loop")));
            }
            for x in [a, b] {
                if odd.contains(&x) {
                    if !covered.insert(x) {
                        return Err(Error::PlanInvalid(format!("{x} appears twice")));
                    }
                } else if !t.contains(x) {
                    return Err(Error::PlanInvalid(format!(
                        "{x} is neither a terminal nor an odd interior vertex"
                    )));
                }
            }
            if !odd.contains(&a) && !odd.contains(&b) {
                return Err(Error::PlanInvalid(format!(
                    "{a}-{b} has no odd interior endpoint"
                )));
            }
        }
        if let Some(missing) = odd.difference(&covered).next() {
            return Err(Error::PlanInvalid(format!("{missing} is not covered")));
        }
        Ok(())
    }
}

impl fmt::Display for AugmentPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.new_edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for AugmentPlan {
    type Err = String;

    /// Parses `4-5,6-0`; a leading `v` on each vertex is accepted.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(AugmentPlan::default());
        }
        let vertex = |tok: &str| -> std::result::Result<VertexId, String> {
            let tok = tok.trim();
            tok.strip_prefix('v')
                .unwrap_or(tok)
                .parse::<usize>()
                .map(VertexId::new)
                .map_err(|_| format!("bad vertex `{tok}` in plan"))
        };
        s.split(',')
            .map(|pair| {
                let (a, b) = pair
                    .split_once('-')
                    .ok_or_else(|| format!("plan entry `{pair}` is not of the form a-b"))?;
                Ok((vertex(a)?, vertex(b)?))
            })
            .collect::<std::result::Result<Vec<_>, String>>()
            .map(AugmentPlan::new)
    }
}

/// Interior vertices of odd degree.
pub fn odd_interior(g: &MultiGraph, t: &Terminals) -> Result<BTreeSet<VertexId>> {
    let mut odd = BTreeSet::new();
    for v in g.vertices().filter(|&v| !t.contains(v)) {
        if g.degree(v)? % 2 == 1 {
            odd.insert(v);
        }
    }
    Ok(odd)
}

/// Draws the plan's edges into a copy of `g`. New edges get ids after all
/// existing ones.
pub fn augment_odd(g: &MultiGraph, t: &Terminals, plan: &AugmentPlan) -> Result<MultiGraph> {
    plan.validate(g, t)?;
    let mut gn = g.clone();
    for &(a, b) in &plan.new_edges {
        gn.add_edge(a, b)?;
    }
    if cfg!(debug_assertions) {
        for &(a, b) in &plan.new_edges {
            let (y, w) = if t.contains(a) { (b, a) } else { (a, b) };
            if t.contains(w) {
                let before = OddVertexProfile::of(g, t, y)?;
                let after = OddVertexProfile::of(&gn, t, y)?;
                if before.total() % 2 == 1 {
                    debug_assert!(!before.is_balanced() || after.is_balanced());
                }
            }
        }
    }
    Ok(gn)
}
