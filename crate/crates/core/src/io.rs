//! Text formats.
//!
//! The graph format is line based: `v <n>` declares the order, then one
//! adjacency per line, `E <u> <v>` for an edge and `A <u> <v>` for an arc.
//! `#` starts a comment. Loading goes through [`MixedGraph::build`], so an arc
//! pair in both directions is read as an edge.
//!
//! The label sidecar has one line per vertex: `<id> <a,b,c> <undirected|directed>`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, MixedGraph, WalkLabel};

struct Parsed {
    n: usize,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

fn parse_error(source: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: source.to_string(),
        line,
        message: message.into(),
    }
}

fn parse_lines(text: &str, source: &str) -> Result<Parsed> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_error(source, lineno, format!("invalid vertex id `{s}`")))
        };
        match fields.as_slice() {
            ["v", count] => {
                if n.is_some() {
                    return Err(parse_error(source, lineno, "duplicate `v` line"));
                }
                n = Some(number(count)?);
            }
            [kind @ ("E" | "A"), u, v] => {
                if n.is_none() {
                    return Err(parse_error(source, lineno, "adjacency before `v` line"));
                }
                let pair = (number(u)?, number(v)?);
                if *kind == "E" {
                    edges.push(pair);
                } else {
                    arcs.push(pair);
                }
            }
            _ => return Err(parse_error(source, lineno, format!("unrecognized line `{line}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_error(source, 0, "missing `v <n>` line"))?;
    Ok(Parsed { n, edges, arcs })
}

/// Parses the graph format into a mixed graph.
pub fn parse_mixed(text: &str, source: &str) -> Result<MixedGraph> {
    let p = parse_lines(text, source)?;
    MixedGraph::build(p.n, &p.edges, &p.arcs)
}

/// Parses the graph format into a digraph: every `E` line contributes a
/// digon and opposite `A` lines stay two arcs.
pub fn parse_digraph(text: &str, source: &str) -> Result<Digraph> {
    let p = parse_lines(text, source)?;
    let mut arcs = p.arcs;
    for (u, v) in p.edges {
        arcs.push((u, v));
        arcs.push((v, u));
    }
    Digraph::new(p.n, &arcs)
}

pub fn write_mixed(g: &MixedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "v {}", g.order()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "E {u} {v}").unwrap();
    }
    for &(u, v) in g.arcs() {
        writeln!(out, "A {u} {v}").unwrap();
    }
    out
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "v {}", d.order()).unwrap();
    for &(u, v) in d.arcs() {
        writeln!(out, "A {u} {v}").unwrap();
    }
    out
}

pub fn write_labels(labels: &[WalkLabel]) -> String {
    let mut out = String::new();
    for (id, label) in labels.iter().enumerate() {
        let kind = if label.undirected {
            "undirected"
        } else {
            "directed"
        };
        writeln!(out, "{id} {label} {kind}").unwrap();
    }
    out
}

pub fn parse_labels(text: &str, source: &str) -> Result<Vec<WalkLabel>> {
    let mut labels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || parse_error(source, i + 1, format!("malformed label line `{line}`"));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [id, seq, kind] = fields.as_slice() else {
            return Err(bad());
        };
        if id.parse::<usize>().ok() != Some(labels.len()) {
            return Err(bad());
        }
        let seq = parse_tuple(seq).ok_or_else(bad)?;
        let undirected = match *kind {
            "undirected" => true,
            "directed" => false,
            _ => return Err(bad()),
        };
        labels.push(WalkLabel { seq, undirected });
    }
    Ok(labels)
}

/// Parses `a,b,c` into vertex ids.
pub fn parse_tuple(text: &str) -> Option<Vec<usize>> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().ok())
        .collect()
}

/// Graphviz rendering: every vertex is declared, edges are drawn with
/// `dir=none`, arcs as plain directed connections.
pub fn to_dot(g: &MixedGraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..g.order() {
        match g.label(v) {
            Some(label) => writeln!(out, "  {v} [label=\"{label}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -> {v} [dir=none];").unwrap();
    }
    for &(u, v) in g.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Reads back the subset of DOT produced by [`to_dot`]. Labels are ignored.
pub fn parse_dot(text: &str, source: &str) -> Result<MixedGraph> {
    let mut n = 0usize;
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with("digraph") || line == "}" {
            continue;
        }
        let bad = || parse_error(source, i + 1, format!("unsupported DOT line `{line}`"));
        let body = line.strip_suffix(';').ok_or_else(bad)?;
        let (stmt, attrs) = match body.find('[') {
            Some(at) => (body[..at].trim(), body[at..].trim()),
            None => (body.trim(), ""),
        };
        let id = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        if let Some((u, v)) = stmt.split_once("->") {
            let pair = (id(u)?, id(v)?);
            if attrs.contains("dir=none") {
                edges.push(pair);
            } else {
                arcs.push(pair);
            }
        } else {
            n = n.max(id(stmt)? + 1);
        }
    }
    MixedGraph::build(n, &edges, &arcs)
}
