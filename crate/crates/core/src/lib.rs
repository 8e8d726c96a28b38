//! Multigraded Betti numbers of edge ideals, computed from the homology of
//! independence complexes, together with the combinatorial side of the story:
//! weak chordality tests, co-pair edges, strongly disjoint families of
//! complete bipartite subgraphs, and certificate extraction for weakly
//! chordal graphs.

pub mod certificates;
pub mod complex;
pub mod error;
pub mod graph;
pub mod hochster;
pub mod io;
pub mod linalg;
#[cfg(test)]
pub(crate) mod testutil;
pub mod wchordal;

pub use error::{Error, Result};
pub use graph::{Graph, Relabeling, VertexSet};
pub use linalg::Field;
