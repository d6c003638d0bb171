//! Non-synchronizing partitions, regular sections, the parameters `m(G)` and
//! `M(G)`, the synchronizing-group decision and the almost-synchronizing
//! sampler.
//!
//! A partition `P` of the points is *non-synchronizing* for `G` when some set
//! `S` meets every part exactly once and so does every translate `S·g`; such
//! an `S` is a *G-regular section* of `P`. `G` is synchronizing exactly when
//! no such pair exists, which is decided here through the G-invariant graphs:
//! a nontrivial invariant graph `X` with `ω(X) = χ(X)` yields one.

mod gamma;
mod params;
mod report;
mod sample;
mod search;

pub use gamma::{gamma_s, gamma_s_complement, neighborhoods_meet_in, m_s_t, neighborhood_structure_check};
pub use params::{sync_params, theorem6_gate, two_intersect_violations, Gate, MEntry, SyncParams};
pub use report::{GraphReport, SyncReport, SCHEMA_VERSION};
pub use sample::{almost_sync_sample, SampleFailure, SampleReport};
pub use search::{
    find_nonsync_partitions, invariant_graph, is_regular_section, is_synchronizing_group,
    nonsync_search, set_orbit, InvariantGraph, NonSyncSearch, NonSyncWitness, SyncVerdict,
    MAX_PAIR_ORBITS,
};
