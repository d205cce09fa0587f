//! Configuration parsing and record emission for the `ring-pursuit` binary.

pub mod config;
pub mod emit;
