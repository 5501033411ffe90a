//! Impartial selection of a single agent from a nomination graph.
//!
//! The crate implements the 2-partition, k-partition and permutation
//! mechanisms, an exact rational oracle for their selection laws, the
//! closed-form performance bounds they satisfy, and a seeded Monte Carlo
//! estimator for graphs beyond the oracle's reach.
//!
//! Everything here is `no_std` with `alloc`. File IO, the command-line tool
//! and the parallel drivers live in the `impartial-tools` crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod exact;
pub mod graph;
pub mod limits;
pub mod mechanisms;
pub mod montecarlo;
pub mod rng;

pub use error::{Error, ParseError};
pub use exact::{Oracle, RatioReport, Rational, SelectionDistribution};
pub use graph::{Graph, GraphClass, Vertex, VertexSubset};
pub use limits::Limits;
pub use mechanisms::{BlockAssignment, CandidateState, MechanismSpec, Runner, TieBreak};
pub use rng::Prng;

pub type Result<T, E = Error> = core::result::Result<T, E>;
