//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! v 6
//! e 0 4
//! e 1 4
//! t 0 1 2 3
//! ```
//!
//! `v` must come first. Edge ids follow the order of the `e` lines. The
//! `t` line is optional.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Terminals, VertexId};

/// A parsed graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: MultiGraph,
    pub terminals: Option<Terminals>,
}

impl GraphFile {
    pub fn require_terminals(&self) -> Result<Terminals> {
        self.terminals.ok_or(Error::Parse {
            line: 0,
            msg: "missing `t` record".into(),
        })
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(parse_err(
            line,
            format!("expected {N} integers, found {}", fields.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line, format!("`{f}` is not a nonnegative integer")))?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut graph: Option<MultiGraph> = None;
    let mut terminals = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match (fields[0], &graph) {
            ("v", None) => {
                let [n] = numbers::<1>(line, &fields[1..])?;
                graph = Some(MultiGraph::with_vertices(n));
            }
            ("v", Some(_)) => return Err(parse_err(line, "duplicate `v` record")),
            (_, None) => return Err(parse_err(line, "`v` record must come first")),
            ("e", Some(_)) => {
                let [u, w] = numbers::<2>(line, &fields[1..])?;
                let g = graph.as_mut().expect("checked above");
                g.add_edge(VertexId::new(u), VertexId::new(w))
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            ("t", Some(g)) => {
                if terminals.is_some() {
                    return Err(parse_err(line, "duplicate `t` record"));
                }
                let t = Terminals::from_indices(numbers::<4>(line, &fields[1..])?)
                    .and_then(|t| t.check_in(g).map(|_| t))
                    .map_err(|e| parse_err(line, e.to_string()))?;
                terminals = Some(t);
            }
            (other, _) => return Err(parse_err(line, format!("unknown record `{other}`"))),
        }
    }
    let graph = graph.ok_or_else(|| parse_err(0, "missing `v` record"))?;
    Ok(GraphFile { graph, terminals })
}

/// Renders live edges in id order. Tombstoned ids are not preserved.
pub fn write_graph(g: &MultiGraph, t: Option<&Terminals>) -> String {
    let mut out = String::new();
    writeln!(out, "v {}", g.vertex_count()).unwrap();
    for (_, u, w) in g.edges() {
        writeln!(out, "e {} {}", u.index(), w.index()).unwrap();
    }
    if let Some(t) = t {
        let [a, b, c, d] = t.as_array().map(VertexId::index);
        writeln!(out, "t {a} {b} {c} {d}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixture;

    #[test]
    fn round_trip_fixture() {
        let (g, t) = fixture::counterexample();
        let text = write_graph(&g, Some(&t));
        let parsed = parse_graph(&text).unwrap();
        assert_eq!(parsed.graph, g);
        assert_eq!(parsed.terminals, Some(t));
    }

    #[test]
    fn comments_and_blank_lines() {
        let f = parse_graph("# header\n\nv 4 # four\ne 0 1\n  e 2 3\n").unwrap();
        assert_eq!(f.graph.edge_count(), 2);
        assert!(f.terminals.is_none());
        assert!(f.require_terminals().is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("v 3\ne 0 3\n", 2),
            ("v 3\ne 1 1\n", 2),
            ("e 0 1\n", 1),
            ("v 4\nt 0 1 2\n", 2),
            ("v 4\nt 0 1 2 2\n", 2),
            ("v 4\nx 1\n", 2),
            ("v 2\ne 0 -1\n", 2),
        ];
        for (text, want) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
