//! Permutations of `{0..n}` and permutation groups given by generators.

mod group;
mod permutation;

pub use group::{BlockSystem, PermGroup};
pub use permutation::{compose, conjugate, inverse, Permutation};
