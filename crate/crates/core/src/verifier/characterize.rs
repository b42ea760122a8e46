//! Graphs whose edge coalition number equals their size, found by checking
//! the singleton partition of every connected graph of a class, and the
//! textual shape descriptions they are compared against.

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, CanonicalKey};
use crate::coalition::is_singleton_ec;
use crate::enumerate::{bundled_graphs, bundled_trees_8, bundled_unicyclic_8, generate_all, BUNDLED_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CHARACTERIZE_MAX_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Tree,
    Unicyclic,
    /// Connected with more edges than vertices.
    Other,
}

/// Class of a connected graph; `None` for disconnected graphs.
pub fn class_of(g: &Graph) -> Option<GraphClass> {
    if g.n() == 0 || !g.is_connected() {
        return None;
    }
    Some(match g.m() + 1 {
        x if x == g.n() => GraphClass::Tree,
        x if x == g.n() + 1 => GraphClass::Unicyclic,
        _ => GraphClass::Other,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcEqualsSize {
    pub key: CanonicalKey,
    pub n: usize,
    pub m: usize,
    /// Matching textual shape, if any.
    pub shape: Option<String>,
}

fn connected_of_order(n: usize, class: GraphClass) -> Result<Vec<Graph>> {
    let all = match (n, class) {
        (0, _) => Vec::new(),
        (n, _) if n <= BUNDLED_MAX_ORDER => bundled_graphs(n)?,
        (8, GraphClass::Tree) => bundled_trees_8()?,
        (8, GraphClass::Unicyclic) => bundled_unicyclic_8()?,
        (8, GraphClass::Other) => generate_all(8)?,
        (n, _) => {
            return Err(Error::OrderTooLarge {
                n,
                cap: CHARACTERIZE_MAX_ORDER,
            })
        }
    };
    Ok(all.into_iter().filter(|g| class_of(g) == Some(class)).collect())
}

/// Every connected graph of the class on at most `n_max` vertices with
/// `EC = m`, ordered by `n` then key.
pub fn characterize_ec_equals_m(n_max: usize, class: GraphClass) -> Result<Vec<EcEqualsSize>> {
    if n_max > CHARACTERIZE_MAX_ORDER {
        return Err(Error::SizeCapExceeded {
            what: "EC = m characterization (vertices)",
            m: n_max,
            cap: CHARACTERIZE_MAX_ORDER,
        });
    }
    let mut out = Vec::new();
    for n in 2..=n_max {
        let mut found = Vec::new();
        for g in connected_of_order(n, class)? {
            if is_singleton_ec(&g)? {
                found.push(EcEqualsSize {
                    key: canonical_key(&g)?,
                    n,
                    m: g.m(),
                    shape: match class {
                        GraphClass::Tree => tree_shape(&g),
                        GraphClass::Unicyclic => unicyclic_shape(&g),
                        GraphClass::Other => None,
                    }
                    .map(str::to_string),
                });
            }
        }
        found.sort_by(|a, b| a.key.cmp(&b.key));
        out.extend(found);
    }
    Ok(out)
}

fn is_leaf(g: &Graph, v: usize) -> bool {
    g.degree(v) == 1
}

/// Textual tree shapes with `EC = m`: `K2`, stars, double stars, and double
/// stars whose central edge is subdivided once.
pub fn tree_shape(g: &Graph) -> Option<&'static str> {
    if class_of(g) != Some(GraphClass::Tree) || g.m() == 0 {
        return None;
    }
    if g.n() == 2 {
        return Some("K2");
    }
    let inner: Vec<usize> = (0..g.n()).filter(|&v| !is_leaf(g, v)).collect();
    match inner.as_slice() {
        [_] => Some("star"),
        [a, b] if g.has_edge(*a, *b) => Some("double star"),
        // the middle vertex has degree two and joins the other two
        [_, _, _] => inner
            .iter()
            .any(|&c| g.degree(c) == 2 && g.neighbors(c).iter().all(|w| inner.contains(w)))
            .then_some("subdivided double star"),
        _ => None,
    }
}

/// Vertices on the unique cycle of a connected unicyclic graph.
fn cycle_vertices(g: &Graph) -> Vec<usize> {
    let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; g.n()];
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    (0..g.n()).filter(|&v| !removed[v]).collect()
}

/// Textual unicyclic shapes with `EC = m`.
pub fn unicyclic_shape(g: &Graph) -> Option<&'static str> {
    if class_of(g) != Some(GraphClass::Unicyclic) {
        return None;
    }
    let cycle = cycle_vertices(g);
    let len = cycle.len();
    let off: Vec<usize> = (0..g.n()).filter(|v| !cycle.contains(v)).collect();
    if off.is_empty() {
        return (3..=6).contains(&len).then_some("cycle");
    }
    // cycle vertices carrying something outside the cycle
    let hubs: Vec<usize> = cycle.iter().copied().filter(|&c| g.degree(c) > 2).collect();
    let pendant_only = off.iter().all(|&v| is_leaf(g, v) && cycle.contains(&g.neighbors(v)[0]));
    match len {
        3 if pendant_only => Some("triangle with pendant stars"),
        3 if hubs.len() == 1 => {
            let x = hubs[0];
            let outside: Vec<usize> = g.neighbors(x).iter().copied().filter(|w| !cycle.contains(w)).collect();
            let inner: Vec<usize> = outside.iter().copied().filter(|&w| !is_leaf(g, w)).collect();
            let [b] = inner.as_slice() else { return None };
            let leaves_of_x = outside.len() - 1;
            let rest_are_leaves_of_b = off
                .iter()
                .filter(|&&v| v != *b && !outside.contains(&v))
                .all(|&v| is_leaf(g, v) && g.neighbors(v)[0] == *b);
            if !rest_are_leaves_of_b {
                return None;
            }
            // with no leaf at x this is a star hung from the triangle by a leaf
            Some(if leaves_of_x >= 1 {
                "triangle with a double star"
            } else {
                "triangle with a star joined at a leaf"
            })
        }
        4 if pendant_only && hubs.len() <= 2 => Some("square with one or two pendant stars"),
        5 if pendant_only && hubs.len() == 1 => Some("pentagon with one pendant star"),
        _ => None,
    }
}
