//! Benchmarks for `fakedeg-core`; see `benches/`.
