use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("criterion `{criterion}` needs a graph with positive edge mass (2m = 0)")]
    ZeroEdgeMass { criterion: &'static str },

    #[error("balanced modularity needs positive absent-link mass (W*n^2 - 2m = 0)")]
    ZeroComplementMass,

    #[error("the Marcotorchino criterion is limited to non-weighted graphs")]
    WeightedInputNotSupported,

    #[error("edge ({u}, {v}) joins two nodes of zero degree")]
    ZeroDegreeNode { u: usize, v: usize },

    #[error("node {node} is not in community {community}")]
    NodeNotInCommunity { node: usize, community: usize },

    #[error("node {node} is already placed in a community")]
    NodeAlreadyPlaced { node: usize },

    #[error("community {community} does not exist (only {len} slots)")]
    UnknownCommunity { community: usize, len: usize },

    #[error("pass at level {level} exceeded the cap of {cap} sweeps")]
    SweepCapExceeded { level: usize, cap: usize },

    #[error("graph has {n} nodes, exhaustive search is capped at {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("unknown criterion `{0}` (expected one of ng, zc, oz, wc, bm, di, du, g, pd)")]
    UnknownCriterion(String),

    #[error("criterion `{name}` is not pluggable into the Louvain optimizer: {reason}")]
    NotPluggable { name: String, reason: &'static str },

    #[error("alpha must lie strictly between 0 and 1, got {0}")]
    InvalidAlpha(f64),

    #[error("precision must be positive, got {0}")]
    InvalidPrecision(f64),

    #[error("partition has {got} entries but the graph has {expected} nodes")]
    PartitionSize { expected: usize, got: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: negative edge weight {weight}")]
    NegativeWeight { line: usize, weight: f64 },

    #[error("line {line}: unknown node label `{label}`")]
    UnknownLabel { line: usize, label: String },

    #[error("partition does not cover node `{label}`")]
    MissingLabel { label: String },

    #[error("line {line}: node `{label}` listed twice")]
    DuplicateLabel { line: usize, label: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
