//! Exact edge coalition numbers, constructive lower bounds and closed-form
//! upper bounds.

mod bounds;
mod construct;
mod exact;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::partition::EdgePartition;

pub use bounds::{ec_lower_bound, ec_upper_bound, greedy_merge_partition, LowerBound, UpperBound};
pub use construct::{delta_construction, existence_partition, kr_s_construction};
pub use exact::{all_ec_partitions, ec_exact, first_valid_partition, ALL_PARTITIONS_MAX_EDGES};
pub(crate) use exact::search_max;

/// Hard limit imposed by the single-word edge masks used in the search.
pub const MASK_EDGES: usize = 64;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Largest `m` accepted by [`ec_exact`].
    pub max_edges: usize,
    pub time_budget: Option<Duration>,
    /// Collect every maximum-order partition, not just the first.
    pub emit_all_optima: bool,
    /// Worker threads; 1 gives reproducible certificates.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_edges: 24,
            time_budget: None,
            emit_all_optima: false,
            threads: 1,
        }
    }
}

/// A named bound value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub name: String,
    pub value: usize,
}

impl Bound {
    pub(crate) fn new(name: &str, value: usize) -> Self {
        Bound {
            name: name.to_string(),
            value,
        }
    }
}

#[derive(Clone, Debug)]
pub struct EcResult {
    pub value: usize,
    /// First maximum-order ec-partition in restricted growth string order
    /// (single-threaded runs).
    pub certificate: EdgePartition,
    pub bound_trace: Vec<Bound>,
    /// Every maximum-order ec-partition when requested, else empty.
    pub all_optima: Vec<EdgePartition>,
    pub nodes: u64,
}

impl EcResult {
    pub fn lower(&self) -> usize {
        self.bound_trace
            .iter()
            .filter(|b| b.name.starts_with("lower:"))
            .map(|b| b.value)
            .max()
            .unwrap_or(1)
    }

    pub fn upper(&self) -> usize {
        self.bound_trace
            .iter()
            .filter(|b| b.name.starts_with("upper:"))
            .map(|b| b.value)
            .min()
            .unwrap_or(usize::MAX)
    }
}
