//! Sequence mixed graphs, iterated line digraphs and mixed Moore bounds.
//!
//! A mixed graph has undirected edges and directed arcs. The `ℓ`-sequence
//! mixed graph `S^ℓ(G)` has the `ℓ`-walks of `G` as vertices, a walk made
//! only of edges being identified with its reversal, and joins walks that
//! overlap in `ℓ` vertices. This crate builds those graphs, measures their
//! distances and degrees, compares them with the mixed Moore bound, and
//! implements the degree reduction and routing that go with them.

pub mod census;
pub mod error;
pub mod factor;
pub mod gen;
pub mod graph;
pub mod io;
pub mod lineage;
pub mod metrics;
pub mod moore;
pub mod reduce;
pub mod route;

pub use error::{Error, Result};
pub use graph::{DegreeTriple, Digraph, MixedGraph, WalkBase, WalkLabel};
