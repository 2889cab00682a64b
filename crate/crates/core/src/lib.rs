//! Average connectivity matrices of simple graphs.
//!
//! `A_κ̄(G)` has entries `κ(u, v) / C(n, 2)`, where `κ(u, v)` is the local
//! vertex connectivity. The crate computes it, its spectrum, the matching
//! number, and the bounds relating the two, and checks them exhaustively on
//! small graphs.

pub mod bounds;
pub mod connectivity;
pub mod error;
pub mod flow;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod numfmt;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, PartiteSplit, VertexPartition};
