use thiserror::Error;

use crate::graph::{FaceId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inconsistent rotation: {0}")]
    InconsistentRotation(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("rotation system is not planar: {0}")]
    NonPlanar(String),
    #[error("cannot identify the outer face: {0}")]
    OuterFace(String),
    #[error("no face has all of its vertices complete")]
    EmptyDual,
    #[error("subgraph leaves the complete region at vertex {0}")]
    UnsafeSubgraph(VertexId),
    #[error("vertex {0} is not complete")]
    UnsafeVertex(VertexId),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(VertexId, VertexId),
    #[error("walk was produced by a different host graph")]
    WalkHostMismatch,
    #[error("invalid subgraph: {0}")]
    InvalidSubgraph(String),
    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("degree parameter below 3: p={0}, q={1}")]
    DegreeTooSmall(u32, u32),
    #[error("infeasible patch spec: {0}")]
    InfeasibleSpec(String),
    #[error("parameters ({0},{1}) are spherical")]
    SphericalParameters(u32, u32),
    #[error("search region too small: {0}")]
    RegionTooSmall(String),
    #[error("degree audit failed: {0}")]
    DegreeAuditFailed(String),
    #[error("unsupported face degree q={0}; expected 3, 4 or 6")]
    UnsupportedQ(u32),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("parameters ({0},{1}) are parabolic, PQ = 4")]
    ParabolicParameters(u32, u32),
    #[error("not a triangulation: face {0} has degree {1}")]
    NotTriangulation(FaceId, usize),
    #[error("growth failed: {0}")]
    Growth(String),
    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
