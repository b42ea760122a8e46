//! graph6 encoding (short form, n <= 62).
//!
//! The writer encodes the graph's current labeling; it does not relabel.
//! Parsed graphs list their edges in lexicographic order.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
pub const MAX_ORDER: usize = 62;

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let text = line.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::MalformedGraph6("empty input".into()))?;
    if first == 126 {
        let n = match body {
            [a, b, c, ..] if body[0] != 126 => {
                ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63)
            }
            _ => usize::MAX,
        };
        return Err(Error::UnsupportedOrder(n));
    }
    if !(63..126).contains(&first) {
        return Err(Error::MalformedGraph6(format!("bad size byte {first}")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    if let Some(b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::new(n, &edges)
}

/// Parses every non-blank line of a graph6 stream.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}
