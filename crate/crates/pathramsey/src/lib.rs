//! File formats, experiment configuration and the parallel runner behind the
//! `pathramsey` command-line tool. The algorithms live in `pathramsey-core`.

pub mod config;
pub mod experiment;
pub mod io;
pub mod report;

pub use pathramsey_core as core;
