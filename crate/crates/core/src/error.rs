use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{what}: {n} vertices exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a clique tree: a biconnected component is not a clique")]
    NotACliqueTree,
    #[error("graph is not a threshold graph")]
    NotThreshold,
    #[error("threshold clique has twins {0} and {1}")]
    CliqueHasTwins(usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("position is not connected; non-disconnecting rulesets need a connected start")]
    PositionDisconnected,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
