use thiserror::Error;

/// Errors raised by graph construction, analysis and the constructions built on top.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("parallel adjacency between {0} and {1}")]
    ParallelAdjacency(usize, usize),

    #[error("sequence {0:?} is not a walk of the base graph")]
    NotAWalk(Vec<usize>),

    #[error("graph has arcs; an undirected graph is required")]
    HasArcs,

    #[error("graph carries no walk labels")]
    MissingLabels,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not totally regular")]
    NotTotallyRegular,

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("closed form undefined for r={r}, z={z}: {reason}")]
    ClosedFormUndefined { r: u32, z: u32, reason: &'static str },

    #[error("no perfect matching found while peeling factor {round} of {target}")]
    MatchingFailure { round: u32, target: u32 },

    #[error("{path}: line {line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
