//! Approximate betweenness centrality on graphs that change in batches of
//! edge insertions, deletions and weight changes.

pub mod bench;
pub mod dyn_sssp;
pub mod dyn_vd;
pub mod dynamic;
pub mod error;
pub mod exact;
pub mod graph;
pub mod rk;
pub mod rng;
pub mod vd;

pub use error::{Error, Result};
pub use exact::{brandes_exact, compute_extended_sssp, BcScores, ExtendedSssp, ShortestPaths};
pub use graph::{Batch, DynGraph, EdgeEvent, EdgeOp, NodeId};
pub use rk::{rk_run, sample_size, SampledPath, SamplingParams};
pub use vd::{vd_upper_bound, BoundClass, VdBound};
pub use dynamic::{DynamicBc, Mode, ReplacePolicy, UpdateSummary};
