//! Exact and sampled probabilities that a Bernoulli(p) random subgraph of a
//! graph avoids triangles (or `K_k`), plus the bounds, exhaustive searches
//! and envelope analysis built on them.
//!
//! `no_std` with `alloc`; file formats, parallel drivers and the CLI live in
//! the companion `trifree` crate.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod canon;
pub mod corpus;
pub mod envelope;
pub mod error;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod hypergraph;
pub mod montecarlo;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod search;

pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::Poly;
pub use rational::Rational;
