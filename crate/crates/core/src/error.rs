use alloc::string::String;

use crate::graph::GraphClass;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: u64, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(u32, u32),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("edge probability {0} is not in [0, 1]")]
    InvalidProbability(f64),
    #[error("need at least 2 blocks, got {0}")]
    InvalidBlockCount(usize),
    #[error("cannot draw uniformly from an empty range")]
    EmptyRange,
    #[error("{what} needs n >= {min}, got {n}")]
    TooFewVertices { what: &'static str, n: usize, min: usize },
    #[error("unknown gadget `{0}`")]
    UnknownGadget(String),
    #[error("gadget `{name}` does not accept n = {n}: {reason}")]
    InvalidGadgetSize { name: &'static str, n: usize, reason: &'static str },
    #[error("vertex {0} appears in more than one block")]
    OverlappingBlocks(u32),
    #[error("distribution has {got} entries but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("maximum indegree is zero")]
    ZeroDelta,
    #[error("parameter {name} = {value} is outside the supported domain")]
    Domain { name: &'static str, value: u64 },
    #[error("refusing {what}: needs about {required} units of work, limit is {limit}")]
    SizeGuard { what: &'static str, required: u128, limit: u128 },
    #[error("no bound is stated for class {class} at n = {n}")]
    UnsupportedBound { n: usize, class: GraphClass },
}

/// Errors from the edge-list reader. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("missing vertex count line")]
    MissingHeader,
    #[error("line {line}: vertex count must be a positive integer")]
    BadHeader { line: usize },
    #[error("line {line}: expected two vertex numbers `u v`")]
    Malformed { line: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("line {line}: duplicate edge {u} -> {v}")]
    DuplicateEdge { line: usize, u: u32, v: u32 },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
}
