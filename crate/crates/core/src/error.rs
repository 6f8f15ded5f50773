use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6: {message} at byte {offset}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("hypergraph line {line}: {message}")]
    Hypergraph { line: usize, message: String },

    #[error(
        "graph has {n} vertices; at most {} are supported",
        crate::graph::MAX_VERTICES
    )]
    TooLarge { n: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{{{u}, {v}}} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("gamma is undefined for a = 0")]
    GammaDomain,

    #[error("vertex set {0:?} is not a maximum stable set")]
    NotMaximumStableSet(Vec<usize>),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("cannot enumerate graphs on {n} vertices (supported: {min}..={max})")]
    EnumerationRange { n: usize, min: usize, max: usize },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("shard count must be at least 1")]
    ZeroShards,

    #[error("{}:{line}: {source}", path.display())]
    InFile {
        path: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
