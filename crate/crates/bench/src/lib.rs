//! Criterion benchmarks for `dwigner`; the benches live in `benches/`.
