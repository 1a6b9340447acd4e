//! Error types shared across the crate.

use std::fmt;

use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T> = std::result::Result<T, TrackError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrackError {
    #[error("operation requires an undirected graph")]
    ExpectedUndirected,
    #[error("operation requires a directed graph")]
    ExpectedDirected,
    #[error("graph is not chordal; chordless cycle: {0:?}")]
    NotChordal(Vec<VertexId>),
    #[error("graph is not a tournament: {0}")]
    NotTournament(TournamentDefect),
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(VertexId, VertexId),
    #[error("endpoint pairs share vertex {0}")]
    SharedEndpoint(VertexId),
    #[error("vertex {0} is not a tracker")]
    NotATracker(VertexId),
    #[error("source graph has no edges")]
    DegenerateInstance,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("path enumeration exceeded the cap of {cap} paths")]
    PathCapExceeded { cap: usize },
    #[error("exact search is limited to {bound} elements, instance has {size}")]
    SizeBoundExceeded { bound: usize, size: usize },
}

/// Witness for a failed tournament check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TournamentDefect {
    /// Neither orientation of the pair is present.
    MissingPair(VertexId, VertexId),
    /// Both orientations of the pair are present.
    BothDirections(VertexId, VertexId),
}

impl fmt::Display for TournamentDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TournamentDefect::MissingPair(u, v) => {
                write!(f, "no edge between {u} and {v}")
            }
            TournamentDefect::BothDirections(u, v) => {
                write!(f, "both ({u}, {v}) and ({v}, {u}) are present")
            }
        }
    }
}
