//! Criterion benchmarks for the graph solvers, the partition search and reset words; see `benches/`.
