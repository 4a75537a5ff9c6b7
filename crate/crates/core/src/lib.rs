//! Algorithms for multicolour size-Ramsey questions about paths.
//!
//! Everything here is `no_std` with `alloc`: graph containers, random graph
//! generators (binomial, bipartite binomial, pairing model), the path/hole
//! partition procedure, sufficient-condition certificates for arrowing,
//! first-moment exponent functions, lower-bound constructions and
//! monochromatic component machinery.
//!
//! File formats, the CLI and the parallel experiment runner live in the
//! `pathramsey` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod certificates;
pub mod colouring;
pub mod components;
pub mod constants;
pub mod error;
pub mod exponents;
pub mod generators;
pub mod graph;
pub mod lower_bounds;
pub mod optimize;
pub mod path;
pub mod rational;
pub mod rng;

pub use colouring::Colouring;
pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph};
