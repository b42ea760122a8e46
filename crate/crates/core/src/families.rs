//! Standard graph families with frozen vertex and edge orders.
//!
//! | family | vertices | edge order |
//! |---|---|---|
//! | `path(n)` | `0..n` along the path | `(i, i+1)` for `i = 0..n-1` |
//! | `cycle(n)` | `0..n` around the cycle | `(i, i+1)` for `i = 0..n-1`, then `(0, n-1)` |
//! | `complete(n)` | `0..n` | lexicographic |
//! | `complete_bipartite(r, s)` | left `0..r`, right `r..r+s` | lexicographic |
//! | `star(n)` | center `0`, leaves `1..n` | `(0, i)` |
//! | `double_star(p, q)` | centers `0` and `1`, leaves of `0` then leaves of `1` | center edge, then `0`'s leaves, then `1`'s leaves |
//!
//! All families take vertex counts except the bipartite and double-star ones,
//! which take part sizes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamilyParams(msg.into())
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("path needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges)
}

pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph> {
    if r < 1 || s < 1 {
        return Err(invalid(format!("K_(r,s) needs r, s >= 1, got ({r}, {s})")));
    }
    let edges: Vec<_> = (0..r)
        .flat_map(|u| (r..r + s).map(move |v| (u, v)))
        .collect();
    Graph::new(r + s, &edges)
}

/// The star on `n` vertices, `K_(1, n-1)`.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("star needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges)
}

/// `S_(p,q)`: adjacent centers `0` and `1` carrying `p` and `q` leaves.
pub fn double_star(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(invalid(format!("S_(p,q) needs p, q >= 1, got ({p}, {q})")));
    }
    let mut edges = vec![(0, 1)];
    edges.extend((0..p).map(|i| (0, 2 + i)));
    edges.extend((0..q).map(|i| (1, 2 + p + i)));
    Graph::new(p + q + 2, &edges)
}

/// A family member named in the `name:params` mini-language, e.g. `path:6`,
/// `cycle:5`, `complete:4`, `kb:2,4`, `star:5`, `dstar:2,3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    DoubleStar(usize, usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::CompleteBipartite(r, s) => complete_bipartite(r, s),
            Family::Star(n) => star(n),
            Family::DoubleStar(p, q) => double_star(p, q),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(r, s) => write!(f, "kb:{r},{s}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::DoubleStar(p, q) => write!(f, "dstar:{p},{q}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("expected name:params, got {s:?}")))?;
        let nums = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| invalid(format!("bad parameters in {s:?}")))?;
        let one = |ctor: fn(usize) -> Family| match nums.as_slice() {
            [a] => Ok(ctor(*a)),
            _ => Err(invalid(format!("{name} takes one parameter"))),
        };
        let two = |ctor: fn(usize, usize) -> Family| match nums.as_slice() {
            [a, b] => Ok(ctor(*a, *b)),
            _ => Err(invalid(format!("{name} takes two parameters"))),
        };
        let family = match name.trim() {
            "path" | "p" => one(Family::Path)?,
            "cycle" | "c" => one(Family::Cycle)?,
            "complete" | "k" => one(Family::Complete)?,
            "kb" | "bipartite" | "complete_bipartite" => two(Family::CompleteBipartite)?,
            "star" => one(Family::Star)?,
            "dstar" | "double_star" => two(Family::DoubleStar)?,
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        family.build()?;
        Ok(family)
    }
}
