//! Benchmark harness for the fifth-order WENO solver library: a problem
//! registry covering the published experiments, error-norm and
//! convergence-table machinery, the first-step weight probe, artifact
//! emission, and golden-file regression.

pub mod config;
pub mod emit;
pub mod golden;
pub mod norms;
pub mod probe;
pub mod registry;
pub mod runner;
pub mod solve;
pub mod tables;
