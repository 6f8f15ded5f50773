//! Exact stability-number invariants on graphs of at most 64 vertices,
//! checkers for the bounds relating them, and exhaustive search over
//! small graphs.

mod clique;

pub mod bounds;
pub mod conjectures;
pub mod error;
pub mod format;
pub mod gamma;
pub mod graph;
pub mod harness;
pub mod hypergraph;
pub mod invariants;
pub mod iso;
pub mod verdict;

pub use error::{Error, Result};
pub use format::{parse_edge_list, parse_graph6, parse_hypergraph, to_edge_list, to_graph6};
pub use graph::{named, Edge, Graph, VertexSet, MAX_VERTICES};
pub use harness::{Check, ScanConfig, ScanReport, Source};
pub use hypergraph::HyperGraph;
pub use invariants::{Analysis, CoreDecomposition, CriticalityProfile, InvariantReport};
pub use verdict::{Status, Verdict, Witness};

/// Version string carried by every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
