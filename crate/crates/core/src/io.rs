//! Plain-text graph formats: edge lists, inline edge specs and DOT export.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::EdgePartition;

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedEdgeList(msg.into())
}

fn parse_usize(tok: &str) -> Result<usize> {
    tok.trim()
        .parse()
        .map_err(|_| malformed(format!("not a vertex index: {tok:?}")))
}

/// Parses `n m` followed by `m` lines `u v` (0-based). Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| malformed("missing header line"))?;
    let mut it = header.split_whitespace();
    let (n, m) = match (it.next(), it.next(), it.next()) {
        (Some(n), Some(m), None) => (parse_usize(n)?, parse_usize(m)?),
        _ => return Err(malformed(format!("header must be \"n m\", got {header:?}"))),
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => edges.push((parse_usize(u)?, parse_usize(v)?)),
            _ => return Err(malformed(format!("edge line must be \"u v\", got {line:?}"))),
        }
    }
    if edges.len() != m {
        return Err(malformed(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses an inline spec such as `"3: 0-1,1-2"`. The vertex count may be
/// omitted (`"0-1,1-2"`), in which case it is one more than the largest index.
pub fn parse_inline_edges(spec: &str) -> Result<Graph> {
    let (n, body) = match spec.split_once(':') {
        Some((n, body)) => (Some(parse_usize(n)?), body),
        None => (None, spec),
    };
    let mut edges = Vec::new();
    for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (u, v) = tok
            .split_once('-')
            .ok_or_else(|| malformed(format!("edge must look like u-v, got {tok:?}")))?;
        edges.push((parse_usize(u)?, parse_usize(v)?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::new(n, &edges)
}

/// Parses a partition file: one class per line, edge indices separated by
/// whitespace or commas. Blank lines and `#` comments are ignored.
pub fn parse_partition(text: &str, m: usize) -> Result<EdgePartition> {
    let mut lists = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let class = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(parse_usize)
            .collect::<Result<Vec<_>>>()?;
        lists.push(class);
    }
    EdgePartition::from_index_lists(m, &lists)
}

pub fn write_partition(p: &EdgePartition) -> String {
    p.to_index_lists()
        .iter()
        .map(|c| {
            let items: Vec<String> = c.iter().map(usize::to_string).collect();
            items.join(" ") + "\n"
        })
        .collect()
}

/// DOT export; vertices are labeled by index and edges by edge index.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "  {u} -- {v} [label=\"{e}\"];");
    }
    out.push_str("}\n");
    out
}
