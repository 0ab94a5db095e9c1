//! Exact search for k-vertex-critical graphs in hereditary (H-free) graph
//! classes, with certifying k-colourability checks built on the results.

pub mod graph;
pub mod graph6;
pub mod iso;
pub mod patterns;
pub mod search;
pub mod coloring;
pub mod criticality;
pub mod enumerate;
pub mod certify;
pub mod claims;
pub mod sample;

pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use iso::{all_graphs, canonical_form, is_isomorphic, CanonicalForm};
