//! Std companion to `sigjump-core`: knot catalogs, TSV/JSON reports and the
//! batch commands behind the `sigjump` binary.

pub mod catalog;
pub mod commands;
pub mod report;

pub use sigjump_core;
