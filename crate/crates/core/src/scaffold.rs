//! Contig scaffolding view of a solution: bins are string positions, tokens
//! are contig labels, and every run assigns one contig to a range of bins.

use std::fmt::Write as _;

use crate::instance::Instance;
use crate::solution::Solution;
use crate::solvers::{solve_subset_dp, SolverError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaffoldRun {
    pub label: String,
    /// First and last selected bin (1-based, inclusive).
    pub first: usize,
    pub last: usize,
    pub bins: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaffoldReport {
    pub solution: Solution,
    pub runs: Vec<ScaffoldRun>,
    pub dropped: Vec<usize>,
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl ScaffoldReport {
    pub fn from_solution(instance: &Instance, solution: Solution) -> Self {
        let runs = solution
            .runs()
            .iter()
            .map(|r| ScaffoldRun {
                label: instance.token(r.symbol).to_string(),
                first: r.indices[0],
                last: *r.indices.last().unwrap(),
                bins: r.indices.clone(),
            })
            .collect();
        let mut kept = vec![false; instance.len() + 1];
        for &i in solution.indices() {
            kept[i] = true;
        }
        let dropped = (1..=instance.len()).filter(|&i| !kept[i]).collect();
        ScaffoldReport {
            solution,
            runs,
            dropped,
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("length {}\n", self.solution.len());
        for r in &self.runs {
            writeln!(
                out,
                "run {} bins {}-{} selected {}",
                r.label,
                r.first,
                r.last,
                join(&r.bins)
            )
            .unwrap();
        }
        if self.dropped.is_empty() {
            out.push_str("dropped none\n");
        } else {
            writeln!(out, "dropped {}", join(&self.dropped)).unwrap();
        }
        out
    }
}

/// Solves exactly and reports the induced partition of the bins.
pub fn scaffold(instance: &Instance) -> Result<ScaffoldReport, SolverError> {
    let res = solve_subset_dp(instance)?;
    Ok(ScaffoldReport::from_solution(instance, res.solution))
}
