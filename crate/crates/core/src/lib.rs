//! Exact combinatorial and algebraic invariants of binomial edge ideals.
//!
//! Everything here is pure computation over small simple graphs (at most 64
//! vertices, stored as one `u64` adjacency row per vertex). The crate is
//! `no_std` and only needs an allocator; file formats, parallel drivers and
//! the command line live in the `bei` companion crate.
//!
//! Vertices are addressed by 0-based index. Display labels default to the
//! 1-based names `1..=n`.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod canon;
pub mod chordal;
pub mod cliques;
mod error;
pub mod family;
pub mod graph;
pub mod interval;
pub mod path;
pub mod primes;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
