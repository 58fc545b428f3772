//! Criterion benchmarks for the nested Quot engine; see `benches/`.
