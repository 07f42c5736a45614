//! Criterion benchmarks for `seidel-core`; see `benches/seidel.rs`.
