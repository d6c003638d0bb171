//! Transformations of `{0..n}`, kernels and ranks, constant-map search over
//! generated monoids, and the analysis of minimal-rank products.

mod collapse;
mod monoid;
mod partition;
mod qmap;
mod transformation;
mod word;

pub use collapse::{
    collapsible_pairs, greedy_merge, min_rank, synchronizes, CollapseTable, MinRank,
};
pub use monoid::MonoidClosure;
pub use partition::{is_section, is_uniform, Partition};
pub use qmap::{
    check_block_structure, conjugation_identity_check, find_q, BlockStructureReport, QAnalysis,
};
pub use transformation::{compose, kernel, rank, Transformation};
pub use word::{letter_names, Word};
