//! Criterion benchmarks for the `ductwave` solvers; see `benches/solvers.rs`.
