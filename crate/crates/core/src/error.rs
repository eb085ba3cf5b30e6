use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("deleting every vertex leaves the empty graph")]
    EmptyGraph,
    #[error("{what} is limited to size {cap}, got {n}")]
    SizeCap {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("invalid family parameters: {0}")]
    FamilyParams(String),
    #[error("interval {index} violates the construction rules: {clause}")]
    IntervalRule { index: usize, clause: &'static str },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("lead monomial of basis element {0} is not squarefree")]
    NotSquarefree(usize),
    #[error("vertex {0} is a free vertex of the clique complex")]
    FreeVertex(usize),
    #[error("invalid parameters: {0}")]
    Params(String),
}
