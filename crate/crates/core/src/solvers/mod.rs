//! Solution procedures for Longest Run Subsequence.
//!
//! * [`solve_bruteforce`]: exhaustive search, the reference oracle for small strings.
//! * [`solve_subset_dp`]: exact dynamic program over run-symbol sets.
//! * [`mld_decide`] / [`mld_solve_for_runs`]: randomized detection parameterized
//!   by the number of runs.
//! * [`kernelize`]: the size-`k^2` kernel for the length parameter.
//! * [`approx_solve`]: the `min(|Σ|, occ)`-approximation.

mod approx;
mod bruteforce;
mod kernel;
mod mld;
mod subset_dp;

use thiserror::Error;

pub use approx::approx_solve;
pub use bruteforce::{solve_bruteforce, BRUTEFORCE_MAX_LEN};
pub use kernel::{kernelize, KernelOutcome};
pub use mld::{
    evaluate_run_circuit, mld_decide, mld_solve_for_runs, trial_seeds, FingerprintAlgebra,
    KVerdict, MldParams, TrialReport, WireAlgebra, DEFAULT_TRIALS,
};
pub use subset_dp::{solve_subset_dp, SubsetDpResult, SUBSET_DP_MAX_ALPHABET, SUBSET_DP_MAX_CELLS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("string length {len} exceeds the brute-force cap {cap}")]
    InstanceTooLarge { len: usize, cap: usize },
    #[error("alphabet size {sigma} exceeds the subset-DP cap {cap}")]
    AlphabetTooLarge { sigma: usize, cap: usize },
    #[error("subset-DP table would need {cells} cells (cap {cap})")]
    TableTooLarge { cells: usize, cap: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("no length reached a yes verdict for r = {r} after {trials} trials")]
    NoSolutionFound { r: usize, trials: usize },
}
