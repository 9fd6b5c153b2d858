//! Criterion benchmarks for the Brill pipeline live in `benches/`.
