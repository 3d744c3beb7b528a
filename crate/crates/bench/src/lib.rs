//! Criterion benchmarks for airystable; see `benches/`.
