//! Exact dynamic program over run-symbol sets.
//!
//! `g(i, U)` is the maximum length of a run subsequence of `S[1..i]` whose
//! set of run symbols is exactly `U`. When `S[i] = a ∈ U` and the `a`-run
//! ends at `i`, the run takes every `a` after the previous part, so only the
//! split points just before an `a` occurrence matter:
//!
//! ```text
//! g(i, U) = max( g(i-1, U),  max_t g(p_t - 1, U \ {a}) + (m - t + 1) )
//! ```
//!
//! where `p_1 < … < p_m = i` are the positions of `a` in `S[1..i]`.

use super::SolverError;
use crate::instance::Instance;
use crate::occ::OccIndex;
use crate::solution::Solution;

pub const SUBSET_DP_MAX_ALPHABET: usize = 24;
/// Upper bound on `(|S| + 1) * 2^|Σ|` table cells (4 bytes each).
pub const SUBSET_DP_MAX_CELLS: usize = 1 << 28;

const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetDpResult {
    pub solution: Solution,
    /// `profile[r]` is the maximum length over run subsequences with exactly
    /// `r` runs, for `r = 0..=|Σ|`.
    pub profile: Vec<usize>,
}

impl SubsetDpResult {
    pub fn optimum(&self) -> usize {
        self.solution.len()
    }

    /// Whether some run subsequence has exactly `r` runs and length exactly `k`.
    /// Any run of length at least two can lose an element, so the feasible
    /// lengths for `r` runs are exactly `r..=profile[r]`.
    pub fn feasible(&self, r: usize, k: usize) -> bool {
        r < self.profile.len() && r <= k && k <= self.profile[r]
    }
}

pub fn solve_subset_dp(instance: &Instance) -> Result<SubsetDpResult, SolverError> {
    let sigma = instance.alphabet_size();
    if sigma > SUBSET_DP_MAX_ALPHABET {
        return Err(SolverError::AlphabetTooLarge {
            sigma,
            cap: SUBSET_DP_MAX_ALPHABET,
        });
    }
    let n = instance.len();
    let width = 1usize << sigma;
    let cells = (n + 1) * width;
    if cells > SUBSET_DP_MAX_CELLS {
        return Err(SolverError::TableTooLarge {
            cells,
            cap: SUBSET_DP_MAX_CELLS,
        });
    }

    let occ = OccIndex::build(instance);
    let mut g = vec![UNREACHABLE; cells];
    g[0] = 0;
    for i in 1..=n {
        let a = instance.at(i);
        let bit = 1usize << a;
        let m = occ.count_prefix(a, i);
        let pos = &occ.positions(a)[..m];
        let (before, row) = g.split_at_mut(i * width);
        let row = &mut row[..width];
        row.copy_from_slice(&before[(i - 1) * width..]);
        for u in (0..width).filter(|u| u & bit != 0) {
            let w = u ^ bit;
            for (t, &p) in pos.iter().enumerate() {
                let prev = before[(p - 1) * width + w];
                if prev != UNREACHABLE {
                    let cand = prev + (m - t) as u32;
                    if row[u] == UNREACHABLE || cand > row[u] {
                        row[u] = cand;
                    }
                }
            }
        }
    }

    let last = &g[n * width..];
    let mut profile = vec![0usize; sigma + 1];
    for (u, &v) in last.iter().enumerate() {
        if v != UNREACHABLE {
            let r = u.count_ones() as usize;
            profile[r] = profile[r].max(v as usize);
        }
    }
    // Smallest set (as a bitmask) among the optimal ones.
    let best_u = (0..width)
        .filter(|&u| last[u] != UNREACHABLE)
        .max_by(|&x, &y| last[x].cmp(&last[y]).then(y.cmp(&x)))
        .unwrap_or(0);

    let indices = backtrack(instance, &occ, &g, width, n, best_u);
    let solution =
        Solution::validate(instance, &indices).expect("backtracking yields a run subsequence");
    debug_assert_eq!(solution.len(), last[best_u] as usize);
    Ok(SubsetDpResult { solution, profile })
}

fn backtrack(
    instance: &Instance,
    occ: &OccIndex,
    g: &[u32],
    width: usize,
    n: usize,
    mut u: usize,
) -> Vec<usize> {
    let mut i = n;
    let mut picked = Vec::new();
    while u != 0 {
        let here = g[i * width + u];
        if g[(i - 1) * width + u] == here {
            i -= 1;
            continue;
        }
        let a = instance.at(i);
        let m = occ.count_prefix(a, i);
        let pos = &occ.positions(a)[..m];
        let w = u ^ (1 << a);
        // Earliest start first: the longest run that attains the value.
        let t = (0..m)
            .find(|&t| {
                let prev = g[(pos[t] - 1) * width + w];
                prev != UNREACHABLE && prev + (m - t) as u32 == here
            })
            .expect("table value has a witness");
        picked.extend(pos[t..].iter().rev());
        i = pos[t] - 1;
        u = w;
    }
    picked.reverse();
    picked
}
