use super::construct::{delta_construction, existence_partition};
use super::exact::first_valid_partition;
use super::Bound;
use crate::coalition::{is_ec_masks, validate_partition, Reading};
use crate::domination::{Masks, DOMATIC_MAX_EDGES};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::EdgePartition;

#[derive(Clone, Debug)]
pub struct UpperBound {
    pub value: usize,
    pub parts: Vec<Bound>,
}

#[derive(Clone, Debug)]
pub struct LowerBound {
    pub value: usize,
    /// A validated ec-partition of order `value`.
    pub witness: EdgePartition,
    pub parts: Vec<Bound>,
}

/// Counting bound around a non-full edge `e`. A class missing `N[e]` leaves
/// `e` undominated, so its partner meets `N[e]` and contains only non-full
/// edges. Such a partner misses some non-full edge `f`, and all of its
/// partners outside `N[e]` must meet `N[f] - N[e]`.
fn neighborhood_bound(g: &Graph) -> Option<usize> {
    let nb = g.closed_neighborhoods();
    let full = EdgeSet::from_indices(g.m(), g.full_edges()).expect("indices in range");
    let non_full: Vec<usize> = (0..g.m()).filter(|&e| !full.contains(e)).collect();
    non_full
        .iter()
        .map(|&e| {
            let size = nb[e].len();
            let partner_classes = size - nb[e].intersection(&full).len();
            let outside = non_full
                .iter()
                .map(|&f| nb[f].difference(&nb[e]).len())
                .max()
                .unwrap_or(0);
            size + partner_classes * outside
        })
        .min()
}

pub fn ec_upper_bound(g: &Graph) -> Result<UpperBound> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let mut parts = vec![Bound::new("upper:edges", g.m())];
    if let Some(v) = neighborhood_bound(g) {
        parts.push(Bound::new("upper:neighborhood", v));
    }
    let value = parts.iter().map(|b| b.value).min().expect("nonempty");
    Ok(UpperBound { value, parts })
}

/// Singletons for every edge at a vertex adjacent to all others, and the
/// remaining edges as one class.
fn universal_vertex_partition(g: &Graph) -> Result<EdgePartition> {
    let n = g.n();
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 == n).collect();
    if universal.is_empty() || g.is_complete() {
        return Err(Error::ConstructionFailed("needs a universal vertex and a non-complete graph".into()));
    }
    let mut at_universal = EdgeSet::empty(g.m());
    for &v in &universal {
        for &e in g.incident_edges(v) {
            at_universal.insert(e);
        }
    }
    let mut classes: Vec<EdgeSet> = at_universal
        .iter()
        .map(|e| EdgeSet::from_indices(g.m(), [e]).expect("in range"))
        .collect();
    let rest = at_universal.complement();
    if !rest.is_empty() {
        classes.push(rest);
    }
    Ok(EdgePartition::new(g.m(), classes)?.normalized())
}

/// Starting from the singleton partition, repeatedly merge the first orphan
/// class into the class that leaves the fewest orphans.
pub fn greedy_merge_partition(g: &Graph) -> Result<EdgePartition> {
    let masks = Masks::new(g).ok_or(Error::SizeCapExceeded {
        what: "greedy merge",
        m: g.m(),
        cap: 64,
    })?;
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let orphans = |classes: &[u64]| -> Vec<usize> {
        let covers: Vec<u64> = classes.iter().map(|&c| masks.cover(c)).collect();
        (0..classes.len())
            .filter(|&i| {
                if covers[i] == masks.full {
                    return classes[i].count_ones() != 1;
                }
                !(0..classes.len()).any(|j| {
                    j != i && covers[j] != masks.full && covers[i] | covers[j] == masks.full
                })
            })
            .collect()
    };
    let mut classes: Vec<u64> = (0..masks.m).map(|e| 1u64 << e).collect();
    loop {
        let current = orphans(&classes);
        let Some(&o) = current.first() else {
            let lists: Vec<Vec<usize>> = classes
                .iter()
                .map(|&c| crate::domination::bits(c).collect())
                .collect();
            return Ok(EdgePartition::from_index_lists(masks.m, &lists)?.normalized());
        };
        if classes.len() == 1 {
            return Err(Error::ConstructionFailed("greedy merge reached one class".into()));
        }
        let mut best: Option<(usize, Vec<u64>)> = None;
        for x in (0..classes.len()).filter(|&x| x != o) {
            let mut merged = classes.clone();
            merged[x] |= merged[o];
            merged.remove(o);
            let score = orphans(&merged).len();
            if best.as_ref().is_none_or(|(s, _)| score < *s) {
                best = Some((score, merged));
            }
        }
        classes = best.expect("at least two classes").1;
    }
}

fn validated(g: &Graph, name: &str, p: Result<EdgePartition>) -> Option<EdgePartition> {
    match p {
        Ok(p) => match validate_partition(g, &p) {
            Ok(v) if v.is_ec => Some(p),
            _ => {
                log::debug!("{name} witness is not an ec-partition; bound skipped");
                None
            }
        },
        Err(e) => {
            log::debug!("{name} bound not applicable: {e}");
            None
        }
    }
}

/// Best of the constructive lower bounds. Every reported value comes with a
/// witness that has been validated.
pub fn ec_lower_bound(g: &Graph) -> Result<LowerBound> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let mut candidates: Vec<(&str, Result<EdgePartition>)> = Vec::new();
    if let Some(masks) = Masks::new(g) {
        let singles: Vec<u64> = (0..g.m()).map(|e| 1u64 << e).collect();
        if is_ec_masks(&masks, &singles, Reading::Strict) {
            candidates.push(("lower:singleton", EdgePartition::singletons(g.m())));
        }
    }
    if g.m() <= DOMATIC_MAX_EDGES {
        candidates.push(("lower:existence", existence_partition(g)));
    }
    candidates.push(("lower:min_degree", delta_construction(g)));
    candidates.push(("lower:universal_vertex", universal_vertex_partition(g)));
    candidates.push(("lower:greedy_merge", greedy_merge_partition(g)));

    let mut parts = Vec::new();
    let mut best: Option<EdgePartition> = None;
    for (name, p) in candidates {
        if let Some(p) = validated(g, name, p) {
            parts.push(Bound::new(name, p.order()));
            if best.as_ref().is_none_or(|b| p.order() > b.order()) {
                best = Some(p);
            }
        }
    }
    let witness = match best {
        Some(p) => p,
        None => {
            let p = first_valid_partition(g)?;
            parts.push(Bound::new("lower:first_valid", p.order()));
            p
        }
    };
    Ok(LowerBound {
        value: witness.order(),
        witness,
        parts,
    })
}
