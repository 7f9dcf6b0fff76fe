use crate::Rational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {edge}: endpoint {vertex} out of range for {vertex_count} vertices")]
    EndpointOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("edge {edge}: self-loops are not allowed")]
    SelfLoop { edge: usize },
    #[error("edge {edge}: unit cost must be at least 1")]
    ZeroCost { edge: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("perturbation has {got} entries, graph has {expected} edges")]
    PerturbationLength { expected: usize, got: usize },
    #[error("edge {edge}: amount must be non-negative")]
    NegativeAmount { edge: usize },
    #[error("edge {edge}: amount exceeds cap {cap}")]
    CapExceeded { edge: usize, cap: u64 },
    #[error("unknown edge id {edge}")]
    UnknownEdge { edge: usize },
    #[error("pivot {0} is not a weight present in the graph")]
    IllFormedPivot(Rational),
    #[error("edge {edge} is not part of the compacted graph")]
    EdgeNotInCompaction { edge: usize },
    #[error("a single-vertex graph has no partition into two or more parts")]
    SingleVertex,
    #[error("current weights are not integral")]
    NonIntegralWeights,
    #[error("target unreachable: at most {max_increase} increase is attainable")]
    Unreachable { max_increase: Rational },
    #[error("curve was truncated at budget {limit} before reaching the target")]
    CurveTruncated { limit: Rational },
    #[error("base weights are not uniform; use the approximation algorithms instead")]
    NonUniformWeights,
    #[error("capped edges are not supported by the uniform-weight solvers")]
    CappedUniform,
    #[error("instance exceeds the size guard: {0}")]
    SizeGuard(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("demand {demand} exceeds the maximum flow {max_flow}")]
    InfeasibleDemand { demand: u64, max_flow: u64 },
    #[error("sink is unreachable from the source")]
    SinkUnreachable,
    #[error("budget mismatch: trace spends {trace}, final weights spend {weights}")]
    BudgetMismatch { trace: Rational, weights: Rational },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal consistency violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
