//! Edge coalition partitions of finite simple graphs.
//!
//! Two disjoint edge sets form an edge coalition when neither dominates the
//! edges of the graph but their union does. An ec-partition splits the edge
//! set into classes that are each either a single dominating edge or part of
//! a coalition with another class; the edge coalition number is the largest
//! order of such a partition. This crate computes it exactly for small
//! graphs, builds coalition graphs, and runs verification sweeps over graph
//! enumerations.

pub mod canon;
pub mod coalition;
pub mod domination;
pub mod edgeset;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod io;
pub mod partition;
pub mod solver;
pub mod verifier;

pub use coalition::{
    build_ecg, forms_edge_coalition, is_ec_partition_with, is_self_edge_coalition,
    is_singleton_ec, singleton_partition, validate_partition, ClassStatus, CoalitionGraph,
    PartitionVerdict, Reading,
};
pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::EdgePartition;
pub use solver::{ec_exact, EcResult, SolverConfig};
