//! Benchmark-only crate; see `benches/suites.rs`. Run with
//! `cargo bench -p fx-bench`.
