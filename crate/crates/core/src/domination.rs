//! Edge domination: predicates, minimal edge dominating sets and the exact
//! edge-domatic number.
//!
//! A set `D` dominates when every edge outside `D` shares an endpoint with
//! some edge of `D`. Equivalently, the closed neighborhoods of the edges of
//! `D` cover the whole edge set, which is how all checks here are computed.

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::EdgePartition;

pub const MINIMAL_EDS_MAX_EDGES: usize = 20;
pub const DOMATIC_MAX_EDGES: usize = 24;

/// Closed edge neighborhoods as single-word bitmasks (graphs with `m <= 64`).
#[derive(Clone, Debug)]
pub(crate) struct Masks {
    pub m: usize,
    pub full: u64,
    pub nb: Vec<u64>,
}

impl Masks {
    pub fn new(g: &Graph) -> Option<Masks> {
        let m = g.m();
        if m > 64 {
            return None;
        }
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let nb = g
            .closed_neighborhoods()
            .iter()
            .map(|s| s.as_mask().expect("m <= 64"))
            .collect();
        Some(Masks { m, full, nb })
    }

    pub fn cover(&self, mut set: u64) -> u64 {
        let mut cover = 0;
        while set != 0 {
            cover |= self.nb[set.trailing_zeros() as usize];
            set &= set - 1;
        }
        cover
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationReport {
    pub dominating: bool,
    /// Edges outside `D` with no neighbor in `D`.
    pub undominated: EdgeSet,
}

/// Union of the closed neighborhoods of the edges of `d`.
pub fn covered_by(g: &Graph, d: &EdgeSet) -> Result<EdgeSet> {
    if d.universe() != g.m() {
        return Err(Error::MismatchedGraph {
            expected: g.m(),
            found: d.universe(),
        });
    }
    let mut cover = EdgeSet::empty(g.m());
    for e in d.iter() {
        let (u, v) = g.endpoints(e)?;
        for &f in g.incident_edges(u).iter().chain(g.incident_edges(v)) {
            cover.insert(f);
        }
    }
    Ok(cover)
}

pub fn check_edge_dominating(g: &Graph, d: &EdgeSet) -> Result<DominationReport> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let undominated = covered_by(g, d)?.complement();
    Ok(DominationReport {
        dominating: undominated.is_empty(),
        undominated,
    })
}

pub fn is_edge_dominating(g: &Graph, d: &EdgeSet) -> Result<bool> {
    Ok(check_edge_dominating(g, d)?.dominating)
}

fn masks_within(g: &Graph, what: &'static str, cap: usize) -> Result<Masks> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    if g.m() > cap {
        return Err(Error::SizeCapExceeded { what, m: g.m(), cap });
    }
    Ok(Masks::new(g).expect("cap is below 64"))
}

/// Every inclusion-minimal edge dominating set, in increasing bitmask order.
pub fn enumerate_minimal_eds(g: &Graph) -> Result<Vec<EdgeSet>> {
    let masks = masks_within(g, "minimal edge dominating set enumeration", MINIMAL_EDS_MAX_EDGES)?;
    let m = masks.m;
    let mut cover = vec![0u64; 1 << m];
    let mut out = Vec::new();
    for set in 1u64..1 << m {
        let low = set.trailing_zeros() as usize;
        cover[set as usize] = cover[(set & (set - 1)) as usize] | masks.nb[low];
        if cover[set as usize] != masks.full {
            continue;
        }
        let mut rest = set;
        let mut minimal = true;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            if cover[(set ^ bit) as usize] == masks.full {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(EdgeSet::from_mask(m, set));
        }
    }
    Ok(out)
}

/// Shrinks a dominating set to an inclusion-minimal one by repeatedly
/// dropping the highest-index edge whose removal keeps domination.
pub fn shrink_to_minimal(g: &Graph, d: &EdgeSet) -> Result<EdgeSet> {
    if !check_edge_dominating(g, d)?.dominating {
        return Err(Error::NotDominating);
    }
    let mut current = d.clone();
    loop {
        let members: Vec<usize> = current.iter().collect();
        let removable = members.iter().rev().copied().find(|&e| {
            let mut trial = current.clone();
            trial.remove(e);
            !trial.is_empty() && is_edge_dominating(g, &trial).unwrap_or(false)
        });
        match removable {
            Some(e) => current.remove(e),
            None => return Ok(current),
        }
    }
}

/// Size of a smallest edge dominating set.
pub(crate) fn edge_domination_number(masks: &Masks) -> usize {
    fn search(masks: &Masks, start: usize, left: usize, cover: u64) -> bool {
        if cover == masks.full {
            return true;
        }
        if left == 0 {
            return false;
        }
        // the lowest uncovered edge must be hit by a later pick
        let target = (!cover & masks.full).trailing_zeros() as usize;
        (start..masks.m).any(|e| {
            masks.nb[e] >> target & 1 == 1 && search(masks, e + 1, left - 1, cover | masks.nb[e])
        })
    }
    (1..=masks.m)
        .find(|&k| search(masks, 0, k, 0))
        .unwrap_or(masks.m)
}

struct DomaticSearch<'a> {
    masks: &'a Masks,
    k: usize,
    /// Every class needs at least this many edges.
    min_class: usize,
    color: Vec<usize>,
    sizes: Vec<usize>,
    /// Colors already present in each closed neighborhood.
    present: Vec<u32>,
    /// Uncolored edges in each closed neighborhood.
    unassigned: Vec<usize>,
    free: u64,
}

impl DomaticSearch<'_> {
    fn missing(&self, f: usize) -> usize {
        self.k - self.present[f].count_ones() as usize
    }

    /// Uncolored edge to branch on: one inside the neighborhood with the
    /// least slack between uncolored edges and missing colors.
    fn pick(&self) -> (usize, u32) {
        let tight = (0..self.masks.m)
            .filter(|&f| self.missing(f) > 0)
            .min_by_key(|&f| (self.unassigned[f] - self.missing(f), f));
        match tight {
            Some(f) => {
                let e = (self.masks.nb[f] & self.free).trailing_zeros() as usize;
                (e, !self.present[f])
            }
            None => (self.free.trailing_zeros() as usize, 0),
        }
    }

    fn assign(&mut self, left: usize, used: usize) -> bool {
        if left == 0 {
            return true;
        }
        let (e, wanted) = self.pick();
        let limit = (used + 1).min(self.k);
        // colors missing around the tight neighborhood first
        let mut order: Vec<usize> = (0..limit).filter(|&c| wanted >> c & 1 == 1).collect();
        order.extend((0..limit).filter(|&c| wanted >> c & 1 == 0));
        let nb = self.masks.nb[e];
        self.free &= !(1u64 << e);
        for c in order {
            let saved: Vec<(usize, u32)> = bits(nb).map(|f| (f, self.present[f])).collect();
            let mut ok = true;
            for f in bits(nb) {
                self.present[f] |= 1 << c;
                self.unassigned[f] -= 1;
                ok &= self.missing(f) <= self.unassigned[f];
            }
            self.sizes[c] += 1;
            let short: usize = self.sizes.iter().map(|&s| self.min_class.saturating_sub(s)).sum();
            if ok && short < left {
                self.color[e] = c;
                if self.assign(left - 1, used.max(c + 1)) {
                    return true;
                }
            }
            self.sizes[c] -= 1;
            for (f, p) in saved {
                self.present[f] = p;
                self.unassigned[f] += 1;
            }
        }
        self.free |= 1 << e;
        false
    }
}

pub(crate) fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let b = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(b)
        }
    })
}

/// Partition of the edges into `k` dominating classes, if one exists.
fn domatic_partition(masks: &Masks, k: usize, min_class: usize) -> Option<Vec<usize>> {
    let mut search = DomaticSearch {
        masks,
        k,
        min_class,
        color: vec![0; masks.m],
        sizes: vec![0; k],
        present: vec![0; masks.m],
        unassigned: masks.nb.iter().map(|n| n.count_ones() as usize).collect(),
        free: masks.full,
    };
    search.assign(masks.m, 0).then_some(search.color)
}

/// The edge-domatic number with a witness partition into that many
/// dominating classes.
pub fn edge_domatic_number(g: &Graph) -> Result<(usize, EdgePartition)> {
    let masks = masks_within(g, "edge-domatic number", DOMATIC_MAX_EDGES)?;
    let min_closed = masks.nb.iter().map(|n| n.count_ones() as usize).min().unwrap_or(1);
    let gamma = edge_domination_number(&masks);
    let upper = min_closed.min(masks.m / gamma);
    for k in (1..=upper).rev() {
        if let Some(colors) = domatic_partition(&masks, k, gamma) {
            return Ok((k, EdgePartition::from_labels(&colors)?));
        }
    }
    unreachable!("one class is always dominating")
}
