//! Command-line harness over `schurtau-core`: argument parsing, JSON
//! formats and the parallel case runner.

pub mod commands;
pub mod format;
pub mod runner;
