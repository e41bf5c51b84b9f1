//! Benchmarks for gcstruct live under `benches/`.
