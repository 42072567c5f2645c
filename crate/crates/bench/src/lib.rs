//! Criterion benchmarks for the enumeration oracle live under `benches/`.
