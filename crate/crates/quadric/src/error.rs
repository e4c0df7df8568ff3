use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid vertex identifier `{0}`")]
    BadIdentifier(String),
    #[error("duplicate declaration of `{0}`")]
    Duplicate(String),
    #[error("self-loop at `{0}` is not simplicial")]
    SelfLoop(String),
    #[error("edge endpoint `{0}` does not exist")]
    MissingEndpoint(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("subgraph is disconnected")]
    DisconnectedSubgraph(String),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("{0}")]
    InvalidInput(String),
    #[error("complex is not quadric: {0}")]
    NotQuadric(String),
    #[error("complex is not locally quadric: {0}")]
    NotLocallyQuadric(String),
    #[error("walk is not closed")]
    WalkNotClosed,
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("degenerate diagram: {0}")]
    DegenerateDiagram(String),
    #[error("invalid combinatorial map: {0}")]
    InvalidMap(String),
    #[error("diagram has dual-curve pathologies: {0}")]
    PathologiesPresent(String),
    #[error("curvature precondition violated: {0}")]
    CurvatureViolation(String),
    #[error("invalid label map: {0}")]
    InvalidLabels(String),
    #[error("not 4-bridged: witness isometric cycle {0}")]
    NotFourBridged(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("graph is stuck: no bi-dominated vertex and not a biclique")]
    Stuck,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("free 1-cell `{0}` lies on no 2-cell boundary")]
    FreeEdge(String),
    #[error("2-cell `{0}` is not embedded")]
    NonEmbeddedCell(String),
    #[error("no simply-connected-by-construction certificate")]
    NoCertificate,
    #[error("word problem budget exhausted after {states} states")]
    BudgetExhausted { states: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
