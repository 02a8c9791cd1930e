//! Workspace DSL, query commands and example suites over `wfs-core`.

pub mod commands;
pub mod dsl;
pub mod report;
pub mod suites;
pub mod workspace;
