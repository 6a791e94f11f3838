//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
    #[error("pasting rule selected a missing path at vertex {vertex}: {reason}")]
    MissingPastingPath { vertex: u32, reason: String },
    #[error("vertex {0} not found")]
    VertexNotFound(u32),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(u32, u32),
    #[error("plane {plane} is not incident to vertex {vertex}")]
    PlaneNotIncident { vertex: u32, plane: u32 },
    #[error("vertex {0} is not a pasting core")]
    NotACore(u32),
    #[error("vertex {0} is not on a chain")]
    NotInChain(u32),
    #[error("vertex {0} is not a side vertex")]
    NotSideVertex(u32),
    #[error("no such corner edge: {0}")]
    NoCornerEdge(String),
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("bad position {0}")]
    BadPosition(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
