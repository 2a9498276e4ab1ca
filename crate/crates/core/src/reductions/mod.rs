//! Hardness constructions used as instance generators and round-trip checks:
//! the encoding of independent set on cubic graphs and the OR-composition.

mod compose;
mod graph;
mod misc;

use thiserror::Error;

use crate::solution::SolutionError;

pub use compose::{cross_compose, CompositionResult, DOLLAR_TOKEN, HASH_TOKEN};
pub use graph::{
    gen_random_cubic, mis_bruteforce, CubicGraph, GraphError, MIS_MAX_VERTICES, PAIRING_RETRIES,
};
pub use misc::{
    canonicalize, is_canonical, misc_decode, misc_encode, misc_solution_from_is, BlockId,
    ReductionMap, Role, Span,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("solution does not fit the encoded string: {0}")]
    InvalidSolution(SolutionError),
    #[error("vertices {i} and {j} are adjacent")]
    NotIndependent { i: usize, j: usize },
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("no instances to compose")]
    NoInstances,
    #[error("instance {index} has {dimension} {found}, expected {expected}")]
    HeterogeneousInstances {
        dimension: &'static str,
        index: usize,
        expected: usize,
        found: usize,
    },
}
