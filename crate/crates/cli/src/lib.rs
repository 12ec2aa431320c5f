//! Problem files, reports and command dispatch for the `topodeg` binary.

pub mod app;
pub mod problem;
pub mod report;
