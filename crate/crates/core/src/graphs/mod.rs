//! Simple undirected graphs with exact clique and chromatic numbers,
//! endomorphism enumeration, pseudo-core classification and the graph of a
//! transformation monoid.

mod clique;
mod coloring;
mod endo;
mod graph;

pub use clique::{clique_number, clique_number_capped, cliques_of_size, cliques_of_size_upto, maximum_cliques, Clique};
pub use coloring::{chromatic_number, chromatic_number_capped, Coloring};
pub use endo::{endomorphisms, for_each_endomorphism, is_pseudo_core, PseudoCore};
pub use graph::{gr_of_monoid, Graph, GraphMap};
