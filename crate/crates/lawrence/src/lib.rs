//! File formats, JSON reports and the `lawrence` command line on top of
//! [`lawrence_core`].

pub mod cli;
pub mod commands;
pub mod formats;
pub mod report;

pub use lawrence_core as core;
