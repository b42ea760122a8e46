//! Edge coalitions, ec-partition verdicts and coalition graphs.
//!
//! Under the strict reading a dominating class is allowed only when it is a
//! single edge; a larger dominating class makes the partition invalid. The
//! permissive reading accepts any dominating class. Both readings are exposed
//! so that results can be compared.

use serde::{Deserialize, Serialize};

use crate::canon::is_isomorphic;
use crate::domination::{covered_by, Masks};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::EdgePartition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassStatus {
    SingletonDominating,
    /// Indices of every class this class forms a coalition with.
    Partnered(Vec<usize>),
    Orphan,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionVerdict {
    pub is_ec: bool,
    pub class_status: Vec<ClassStatus>,
}

impl PartitionVerdict {
    pub fn first_orphan(&self) -> Option<usize> {
        self.class_status
            .iter()
            .position(|s| matches!(s, ClassStatus::Orphan))
    }

    pub fn partners(&self, class: usize) -> &[usize] {
        match &self.class_status[class] {
            ClassStatus::Partnered(p) => p,
            _ => &[],
        }
    }

    pub fn max_partners(&self) -> usize {
        (0..self.class_status.len())
            .map(|i| self.partners(i).len())
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reading {
    /// Dominating classes must be single edges.
    #[default]
    Strict,
    /// Any dominating class is acceptable.
    Permissive,
}

fn check_universe(g: &Graph, m: usize) -> Result<()> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    if m != g.m() {
        return Err(Error::MismatchedGraph {
            expected: g.m(),
            found: m,
        });
    }
    Ok(())
}

/// True iff neither set dominates and their union does.
pub fn forms_edge_coalition(g: &Graph, a: &EdgeSet, b: &EdgeSet) -> Result<bool> {
    check_universe(g, a.universe())?;
    check_universe(g, b.universe())?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if a.intersects(b) {
        return Err(Error::OverlappingSets);
    }
    let ca = covered_by(g, a)?;
    let cb = covered_by(g, b)?;
    Ok(!ca.is_full() && !cb.is_full() && ca.union(&cb).is_full())
}

pub fn validate_partition(g: &Graph, p: &EdgePartition) -> Result<PartitionVerdict> {
    check_universe(g, p.m())?;
    let covers = p
        .classes()
        .iter()
        .map(|c| covered_by(g, c))
        .collect::<Result<Vec<_>>>()?;
    let k = covers.len();
    let dominating: Vec<bool> = covers.iter().map(EdgeSet::is_full).collect();
    let mut partners = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if !dominating[i] && !dominating[j] && covers[i].union(&covers[j]).is_full() {
                partners[i].push(j);
                partners[j].push(i);
            }
        }
    }
    let class_status: Vec<ClassStatus> = partners
        .into_iter()
        .enumerate()
        .map(|(i, list)| {
            if dominating[i] {
                if p.classes()[i].len() == 1 {
                    ClassStatus::SingletonDominating
                } else {
                    ClassStatus::Orphan
                }
            } else if list.is_empty() {
                ClassStatus::Orphan
            } else {
                ClassStatus::Partnered(list)
            }
        })
        .collect();
    Ok(PartitionVerdict {
        is_ec: !class_status.contains(&ClassStatus::Orphan),
        class_status,
    })
}

pub fn is_ec_partition_with(g: &Graph, p: &EdgePartition, reading: Reading) -> Result<bool> {
    let verdict = validate_partition(g, p)?;
    match reading {
        Reading::Strict => Ok(verdict.is_ec),
        Reading::Permissive => {
            // strict orphans that dominate are acceptable here
            for (i, status) in verdict.class_status.iter().enumerate() {
                if *status == ClassStatus::Orphan && !covered_by(g, &p.classes()[i])?.is_full() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Mask-level validity check used by the search code. `classes` are edge
/// masks of a partition of the graph behind `masks`.
pub(crate) fn is_ec_masks(masks: &Masks, classes: &[u64], reading: Reading) -> bool {
    let covers: Vec<u64> = classes.iter().map(|&c| masks.cover(c)).collect();
    (0..classes.len()).all(|i| {
        if covers[i] == masks.full {
            return reading == Reading::Permissive || classes[i].count_ones() == 1;
        }
        (0..classes.len())
            .any(|j| j != i && covers[j] != masks.full && covers[i] | covers[j] == masks.full)
    })
}

/// Coalition graph of an ec-partition: vertex `i` is class `i`, and two
/// vertices are adjacent when their classes form a coalition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalitionGraph {
    pub graph: Graph,
    pub source: EdgePartition,
}

pub fn build_ecg(g: &Graph, p: &EdgePartition) -> Result<CoalitionGraph> {
    let verdict = validate_partition(g, p)?;
    if let Some(i) = verdict.first_orphan() {
        return Err(Error::NotAnEcPartition(i));
    }
    let mut edges = Vec::new();
    for i in 0..p.order() {
        for &j in verdict.partners(i) {
            if i < j {
                edges.push((i, j));
            }
        }
    }
    Ok(CoalitionGraph {
        graph: Graph::new(p.order(), &edges)?,
        source: p.clone(),
    })
}

pub fn singleton_partition(g: &Graph) -> Result<EdgePartition> {
    EdgePartition::singletons(g.m())
}

pub fn is_singleton_ec(g: &Graph) -> Result<bool> {
    Ok(validate_partition(g, &singleton_partition(g)?)?.is_ec)
}

/// True iff the singleton partition is an ec-partition whose coalition graph
/// is isomorphic to `g`. Graphs without edges are never self-coalition.
pub fn is_self_edge_coalition(g: &Graph) -> Result<bool> {
    if g.m() == 0 || !is_singleton_ec(g)? {
        return Ok(false);
    }
    let ecg = build_ecg(g, &singleton_partition(g)?)?;
    if ecg.graph.n() != g.n() || ecg.graph.m() != g.m() {
        return Ok(false);
    }
    is_isomorphic(&ecg.graph, g)
}
