//! Exhaustive checking of (2,3)-cordial labelings.
//!
//! A `0/1` vertex labeling of a digon-free digraph induces the arc labels
//! `f(head) - f(tail)`. The digraph is cordial when some friendly labeling
//! makes the `+1`, `-1` and `0` counts pairwise within one, and an undirected
//! graph is orientable when one of its orientations is cordial.

pub mod bounds;
pub mod cli;
pub mod edgelist;
pub mod engine;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod named;
pub mod quasigroup;
pub mod report;
pub mod search;
pub mod verification;

pub use error::{Error, Result};
pub use graph::{orient, reverse, Digraph, Graph, Orientation};
pub use labeling::{GammaTriple, LabelingReport, VertexLabeling};
