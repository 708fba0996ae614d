//! Command-line front end, report formats and thread-level parallelism on
//! top of `atomic-core`.

pub mod cli;
pub mod fixtures;
pub mod parallel;
pub mod report;

pub use atomic_core;
