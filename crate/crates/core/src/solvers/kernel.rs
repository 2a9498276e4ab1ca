use crate::instance::Instance;
use crate::occ::OccIndex;
use crate::solution::Solution;

/// Result of the `k^2` kernel for "is there a run subsequence of length at least `k`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelOutcome {
    /// A run subsequence of length at least `k` was found directly.
    TrivialYes(Solution),
    /// An equivalent instance with `|Σ| < k`, every symbol occurring fewer
    /// than `k` times, and hence fewer than `k^2` positions.
    Kernel(Instance),
}

pub fn kernelize(instance: &Instance, k: usize) -> KernelOutcome {
    if k == 0 {
        return KernelOutcome::TrivialYes(Solution::empty());
    }
    let occ = OccIndex::build(instance);
    if let Some(a) = (0..instance.alphabet_size()).find(|&a| occ.positions(a).len() >= k) {
        let sol = Solution::validate(instance, occ.positions(a)).expect("one symbol forms one run");
        return KernelOutcome::TrivialYes(sol);
    }
    if instance.alphabet_size() >= k {
        // Ids follow first appearance, so these are the first k distinct positions.
        let mut firsts: Vec<usize> = (0..k).map(|a| occ.positions(a)[0]).collect();
        firsts.sort_unstable();
        let sol =
            Solution::validate(instance, &firsts).expect("distinct symbols form singleton runs");
        return KernelOutcome::TrivialYes(sol);
    }
    KernelOutcome::Kernel(instance.clone())
}
