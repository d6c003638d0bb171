//! Synchronization properties of finite deterministic automata and permutation
//! groups.
//!
//! The crate decides whether a transformation monoid contains a constant map,
//! whether a primitive group is synchronizing (through its invariant graphs),
//! and computes the non-synchronizing partitions, regular sections and the
//! parameters `m(G)` and `M(G)` that control almost-synchronization.
//!
//! Points are 0-based everywhere inside the library and the action is on the
//! right: `x·g` is written `g.apply(x)` and `compose(p, q)` applies `p` first.
//! The text formats in [`io`] are 1-based.

pub mod bits;
pub mod catalog;
pub mod dfa;
mod error;
pub mod exact_cover;
pub mod graphs;
pub mod io;
pub mod pairs;
pub mod perm;
pub mod sync;
pub mod transform;

pub use error::{Error, Result};

pub use dfa::Dfa;
pub use graphs::{Graph, GraphMap};
pub use perm::{BlockSystem, PermGroup, Permutation};
pub use sync::{NonSyncWitness, SyncParams};

pub use transform::{Partition, QAnalysis, Transformation, Word};

/// Resource limits shared by the exhaustive searches.
///
/// Every search that can blow up takes its limit from here; hitting a limit is
/// reported as [`Error::CapExceeded`], never as a silently truncated answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Caps {
    /// Maximum number of monoid (or group) elements enumerated.
    pub monoid: usize,
    /// Maximum number of search nodes for the graph solvers.
    pub nodes: u64,
    /// Maximum number of sections (or partitions) enumerated per problem.
    pub sections: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            monoid: 1_000_000,
            nodes: 10_000_000,
            sections: 100_000,
        }
    }
}
