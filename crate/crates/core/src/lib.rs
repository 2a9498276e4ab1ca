//! Solvers, algebra and reduction gadgets for the Longest Run Subsequence
//! problem: given a string `S`, find a longest subsequence that contains at
//! most one run (maximal block of equal symbols) per symbol.

pub mod generate;
pub mod gf2;
pub mod instance;
pub mod occ;
pub mod reductions;
pub mod scaffold;
pub mod solution;
pub mod solvers;

pub use instance::{Block, Instance, InstanceError, SymbolId};
pub use occ::OccIndex;
pub use solution::{OutputFormatError, Run, Solution, SolutionError, SolutionOutput};
