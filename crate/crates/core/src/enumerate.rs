//! Bundled graph lists and exhaustive generation of small graphs.
//!
//! The bundled files hold every graph on `n` vertices up to isomorphism for
//! `2 <= n <= 7` (disconnected graphs included), plus the trees and the
//! connected unicyclic graphs on eight vertices. `scripts/gen_graphs.py`
//! regenerates them.

use std::collections::BTreeSet;

use crate::canon::canonical_key;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

pub const BUNDLED_MAX_ORDER: usize = 7;

/// Largest order [`generate_all`] accepts.
pub const GENERATE_MAX_ORDER: usize = 8;

const ALL: [&str; 6] = [
    include_str!("../data/graphs/n2.g6"),
    include_str!("../data/graphs/n3.g6"),
    include_str!("../data/graphs/n4.g6"),
    include_str!("../data/graphs/n5.g6"),
    include_str!("../data/graphs/n6.g6"),
    include_str!("../data/graphs/n7.g6"),
];
const TREES_8: &str = include_str!("../data/graphs/trees_n8.g6");
const UNICYCLIC_8: &str = include_str!("../data/graphs/unicyclic_n8.g6");

/// Number of graphs on `n` unlabeled vertices, `n = 0..=8`.
pub const GRAPH_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

fn parse_list(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

/// Raw graph6 text of the bundled list for order `n`.
pub fn bundled_graph6(n: usize) -> Result<&'static str> {
    match n {
        2..=BUNDLED_MAX_ORDER => Ok(ALL[n - 2]),
        _ => Err(Error::UnsupportedOrder(n)),
    }
}

/// All graphs of order `n` from the bundled lists; order 1 is the single vertex.
pub fn bundled_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 1 {
        return Ok(vec![Graph::empty(1)]);
    }
    parse_list(bundled_graph6(n)?)
}

pub fn bundled_trees_8() -> Result<Vec<Graph>> {
    parse_list(TREES_8)
}

pub fn bundled_unicyclic_8() -> Result<Vec<Graph>> {
    parse_list(UNICYCLIC_8)
}

/// Every graph of order `n` up to isomorphism, built by adding one vertex
/// with every possible neighborhood to each graph of order `n - 1` and
/// keeping one member per canonical key. Output is sorted by key.
pub fn generate_all(n: usize) -> Result<Vec<Graph>> {
    if n > GENERATE_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            cap: GENERATE_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        level = extend(&level, k)?;
    }
    Ok(level)
}

fn extend(level: &[Graph], k: usize) -> Result<Vec<Graph>> {
    let mut seen = BTreeSet::new();
    for g in level {
        for subset in 0u32..1 << k {
            let mut edges = g.edges().to_vec();
            edges.extend((0..k).filter(|&v| subset >> v & 1 == 1).map(|v| (v, k)));
            let h = Graph::new(k + 1, &edges)?;
            seen.insert(canonical_key(&h)?);
        }
    }
    seen.iter().map(|key| parse_graph6(key.as_str())).collect()
}
