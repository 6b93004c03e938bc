//! Command-line front end: verification suites, graph export and argument parsing.

pub mod commands;
pub mod config;
pub mod export;
pub mod suites;
