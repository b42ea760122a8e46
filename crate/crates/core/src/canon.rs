//! Canonical forms and isomorphism for small graphs.
//!
//! The canonical labeling is found by individualization and refinement: the
//! vertex partition is refined by neighbor counts until stable, a vertex of
//! the first non-singleton cell is individualized, and the search branches
//! over every choice. Each discrete leaf defines a relabeling; the canonical
//! form is the relabeled graph whose upper-triangle bit string is smallest.
//! Subtrees whose partition already fixes the whole adjacency pattern (every
//! cell and every pair of cells complete or empty) collapse to a single leaf.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;

/// Largest order accepted by [`canonical_key`].
pub const CANON_MAX_ORDER: usize = 16;

/// graph6 string of the canonically relabeled graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(pub String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    adj: &'a [u32],
    n: usize,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn neighbors_in(&self, v: usize, cell: &[usize]) -> usize {
        cell.iter().filter(|&&w| self.adj[v] >> w & 1 == 1).count()
    }

    fn refine(&self, mut cells: Cells) -> Cells {
        loop {
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<usize>, usize)> = cell
                    .iter()
                    .map(|&v| (cells.iter().map(|c| self.neighbors_in(v, c)).collect(), v))
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    /// Every cell and pair of cells is complete or empty, so all leaves
    /// below this node produce the same code.
    fn homogeneous(&self, cells: &Cells) -> bool {
        cells.iter().all(|a| {
            let v = a[0];
            cells.iter().all(|b| {
                let k = self.neighbors_in(v, b);
                let full = if std::ptr::eq(a, b) { b.len() - 1 } else { b.len() };
                k == 0 || k == full
            })
        })
    }

    fn code(&self, order: &[usize]) -> u128 {
        let mut code = 0u128;
        for j in 1..self.n {
            for i in 0..j {
                code = (code << 1) | (self.adj[order[i]] >> order[j] & 1) as u128;
            }
        }
        code
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().flatten().copied().collect();
        let code = self.code(&order);
        if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
            self.best = Some((code, order));
        }
    }

    fn descend(&mut self, cells: Cells) {
        let cells = self.refine(cells);
        if cells.len() == self.n || self.homogeneous(&cells) {
            self.leaf(&cells);
            return;
        }
        let target = cells.iter().position(|c| c.len() > 1).expect("not discrete");
        for &v in &cells[target] {
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.descend(child);
        }
    }
}

/// A canonical relabeling: `order[p]` is the vertex placed at position `p`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > CANON_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            cap: CANON_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut search = Search {
        adj: &adj,
        n,
        best: None,
    };
    search.descend(vec![(0..n).collect()]);
    Ok(search.best.expect("at least one leaf").1)
}

/// The canonically relabeled graph, edges in lexicographic order.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.n()];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    Ok(g.relabel(&perm)?.with_sorted_edges())
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    Ok(CanonicalKey(write_graph6(&canonical_form(g)?)?))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}
