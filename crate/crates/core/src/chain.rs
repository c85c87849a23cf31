//! Chains over F2: formal sums of edges or vertices, stored as sorted
//! supports. Addition is symmetric difference.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Terminals, VertexId};

macro_rules! chain_type {
    ($name:ident, $id:ty, $prefix:literal) => {
        #[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(BTreeSet<$id>);

        impl $name {
            pub fn zero() -> Self {
                Self::default()
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_empty()
            }

            /// Number of nonzero coordinates.
            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn contains(&self, x: $id) -> bool {
                self.0.contains(&x)
            }

            /// Support in ascending order.
            pub fn iter(&self) -> impl DoubleEndedIterator<Item = $id> + '_ {
                self.0.iter().copied()
            }

            pub fn first(&self) -> Option<$id> {
                self.0.first().copied()
            }

            pub fn last(&self) -> Option<$id> {
                self.0.last().copied()
            }

            /// Adds the single generator `x` in place.
            pub fn toggle(&mut self, x: $id) {
                if !self.0.remove(&x) {
                    self.0.insert(x);
                }
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.0.is_disjoint(&other.0)
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.0.is_subset(&other.0)
            }

            pub fn to_vec(&self) -> Vec<$id> {
                self.iter().collect()
            }
        }

        impl FromIterator<$id> for $name {
            /// Sums the items, so repeated items cancel in pairs.
            fn from_iter<I: IntoIterator<Item = $id>>(iter: I) -> Self {
                let mut c = Self::zero();
                for x in iter {
                    c.toggle(x);
                }
                c
            }
        }

        impl Add for &$name {
            type Output = $name;

            fn add(self, rhs: &$name) -> $name {
                $name(self.0.symmetric_difference(&rhs.0).copied().collect())
            }
        }

        impl Add for $name {
            type Output = $name;

            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_empty() {
                    return f.write_str("0");
                }
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }

        impl FromStr for $name {
            type Err = String;

            /// Parses `e1+e4+e7` (or `v..` for vertices); the prefix letter is
            /// optional and `0` is the zero chain.
            fn from_str(s: &str) -> std::result::Result<Self, String> {
                let s = s.trim();
                if s.is_empty() || s == "0" {
                    return Ok(Self::zero());
                }
                s.split('+')
                    .map(|tok| {
                        let tok = tok.trim();
                        let digits = tok.strip_prefix($prefix).unwrap_or(tok);
                        digits
                            .parse::<usize>()
                            .map(<$id>::new)
                            .map_err(|_| format!("bad chain summand `{tok}`"))
                    })
                    .collect()
            }
        }
    };
}

chain_type!(EdgeChain, EdgeId, 'e');
chain_type!(VertexChain, VertexId, 'v');

impl VertexChain {
    pub fn from_terminals(t: &Terminals) -> Self {
        t.iter().collect()
    }
}

/// The F2-linear boundary map: each edge goes to the sum of its endpoints.
pub fn boundary(g: &MultiGraph, p: &EdgeChain) -> Result<VertexChain> {
    let mut out = VertexChain::zero();
    for e in p.iter() {
        let (u, w) = g.endpoints(e)?;
        out.toggle(u);
        out.toggle(w);
    }
    Ok(out)
}

pub fn is_cycle(g: &MultiGraph, c: &EdgeChain) -> Result<bool> {
    Ok(boundary(g, c)?.is_zero())
}

pub(crate) fn expect_boundary(g: &MultiGraph, p: &EdgeChain, expected: &VertexChain) -> Result<()> {
    let found = boundary(g, p)?;
    if &found == expected {
        Ok(())
    } else {
        Err(Error::BadBoundary {
            expected: expected.to_string(),
            found: found.to_string(),
        })
    }
}
