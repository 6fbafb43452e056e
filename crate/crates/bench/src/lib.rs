//! Criterion benchmarks for `crgedit`; see `benches/`.
