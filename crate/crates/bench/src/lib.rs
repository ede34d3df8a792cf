//! Benchmark-only crate; see `benches/kernels.rs`.
//!
//! The kernels measured here are the ones whose costs scale hardest with
//! carrier order: the cubic axiom scans, the quintic rack check, the
//! factorial canonical-form reduction, and the census backtracker.
