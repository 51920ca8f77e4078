//! Exact-arithmetic toolkit for weighted multigraphs: f-matchings, the
//! f-matching polytope, and the fractional and integer f-chromatic indices.
//!
//! A weighted graph is a loopless multigraph together with a positive integer
//! weight `f(v)` per vertex. An f-matching is an edge set meeting every vertex
//! `v` at most `f(v)` times; an f-colouring partitions the edge set into
//! f-matchings. Everything computes over exact rationals:
//!
//! * [`params`] evaluates the maximum f-degree, the f-density, and the
//!   boundary-augmented density `Γ`, fractional and integer, with witnesses;
//! * [`polytope`] decides membership in the f-matching polytope (convex
//!   weights or a separating functional) and reports violations of the
//!   inequality systems that compete to describe it;
//! * [`chromatic`] computes the fractional f-chromatic index by LP and by
//!   the max{Δ*, Γ*} formula, and the integer index by branch and bound;
//! * [`gallery`] packages small graphs on which the degree/density system
//!   provably overshoots the polytope, plus a seeded random sweep;
//! * [`lp`] is the certified rational simplex underneath it all.
//!
//! The `fpoly` binary exposes all of this on the command line; the crate's
//! `examples/` directory shows one runnable program per capability.

pub mod chromatic;
pub mod cli;
pub mod gallery;
pub mod graph;
pub mod lp;
pub mod matching;
pub mod params;
pub mod polytope;
pub mod rat;

pub use graph::{EdgeId, EdgeSet, Multigraph, VertexId, WeightedGraph};
pub use lp::{check_certificate, solve, Direction, LinearProgram, LpOutcome, Relation};
pub use matching::FMatching;
pub use polytope::{EdgePoint, MembershipVerdict, QSystemVariant};
pub use rat::Rat;

use thiserror::Error;

/// Enumeration guards. Operations that scan all edge subsets or all vertex
/// subsets refuse inputs beyond these sizes instead of silently truncating,
/// because downstream LPs depend on the scans being complete.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest edge count for which f-matchings are enumerated.
    pub max_edges: usize,
    /// Largest vertex count for which vertex subsets are scanned.
    pub max_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_edges: 20,
            max_vertices: 20,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },
    #[error("vertex id {id} out of range (graph has {count} vertices)")]
    VertexOutOfRange { id: usize, count: usize },
    #[error("edge id {id} out of range (graph has {count} edges)")]
    EdgeOutOfRange { id: usize, count: usize },
    #[error("vertex sets overlap at vertex {id}")]
    OverlappingSets { id: usize },
    #[error("weight vector has length {got}, expected {want}")]
    WeightLength { got: usize, want: usize },
    #[error("vertex {vertex} has non-positive weight")]
    NonPositiveWeight { vertex: usize },
    #[error("enumeration over {required} edges exceeds the cap of {cap}; raise the edge cap to at least {required}")]
    EdgeCapExceeded { required: usize, cap: usize },
    #[error("subset scan over {required} vertices exceeds the cap of {cap}; raise the vertex cap to at least {required}")]
    VertexCapExceeded { required: usize, cap: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("this system applies only when every vertex weight equals 1")]
    UnitWeightsRequired,
    #[error("the index formula requires fractional maximum f-degree >= 1, but it is {0}")]
    FormulaPrecondition(String),
    #[error("invalid rational {token:?}: {msg}")]
    BadRational { token: String, msg: String },
    #[error("{0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
