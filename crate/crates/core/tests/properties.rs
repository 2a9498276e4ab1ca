use lrs_core::solvers::{kernelize, solve_bruteforce, solve_subset_dp, KernelOutcome};
use lrs_core::{Instance, OccIndex, Solution, SolutionError};
use proptest::prelude::*;

fn instance(max_len: usize, sigma: usize) -> impl Strategy<Value = Instance> {
    prop::collection::vec(0..sigma, 1..=max_len)
        .prop_map(|v| Instance::from_tokens(v.iter().map(|c| format!("s{c}"))).unwrap())
}

proptest! {
    #[test]
    fn single_symbol_is_one_run(inst in instance(20, 5)) {
        let occ = OccIndex::build(&inst);
        for a in 0..inst.alphabet_size() {
            let sol = Solution::validate(&inst, occ.positions(a)).unwrap();
            prop_assert_eq!(sol.run_count(), 1);
        }
    }

    #[test]
    fn first_occurrences_form_a_solution(inst in instance(20, 6)) {
        let occ = OccIndex::build(&inst);
        let mut firsts: Vec<usize> = (0..inst.alphabet_size()).map(|a| occ.positions(a)[0]).collect();
        firsts.sort_unstable();
        let sol = Solution::validate(&inst, &firsts).unwrap();
        prop_assert_eq!(sol.len(), inst.alphabet_size());
    }

    #[test]
    fn runs_tile_the_string(inst in instance(30, 4)) {
        let blocks = inst.run_decompose();
        prop_assert_eq!(blocks.iter().map(|b| b.len).sum::<usize>(), inst.len());
        prop_assert!(blocks.windows(2).all(|w| w[0].symbol != w[1].symbol));
    }

    #[test]
    fn window_counts(inst in instance(30, 4), from in 1usize..31, to in 0usize..31) {
        let occ = OccIndex::build(&inst);
        let to = to.min(inst.len());
        for a in 0..inst.alphabet_size() {
            let direct = (from..=to).filter(|&i| inst.at(i) == a).count();
            prop_assert_eq!(occ.occ(a, from, to), direct);
        }
    }

    #[test]
    fn validator_agrees_with_definition(inst in instance(10, 3), mask in 0u32..1024) {
        let idx: Vec<usize> = (1..=inst.len()).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let blocks: Vec<usize> = {
            let mut b: Vec<usize> = idx.iter().map(|&i| inst.at(i)).collect();
            b.dedup();
            b
        };
        let mut sorted = blocks.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let ok = sorted.len() == blocks.len();
        match Solution::validate(&inst, &idx) {
            Ok(sol) => {
                prop_assert!(ok);
                prop_assert_eq!(sol.run_count(), blocks.len());
            }
            Err(SolutionError::RepeatedRunSymbol { .. }) => prop_assert!(!ok),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn dp_matches_bruteforce(inst in instance(12, 3)) {
        prop_assert_eq!(solve_subset_dp(&inst).unwrap().optimum(), solve_bruteforce(&inst).unwrap().len());
    }

    #[test]
    fn profile_matches_enumeration(inst in instance(10, 3)) {
        let dp = solve_subset_dp(&inst).unwrap();
        let n = inst.len();
        let mut seen = vec![vec![false; n + 1]; inst.alphabet_size() + 1];
        for mask in 0u32..1 << n {
            let idx: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            if let Ok(sol) = Solution::validate(&inst, &idx) {
                seen[sol.run_count()][sol.len()] = true;
            }
        }
        for (r, row) in seen.iter().enumerate() {
            for (k, &hit) in row.iter().enumerate() {
                prop_assert_eq!(dp.feasible(r, k), hit, "r={} k={}", r, k);
            }
        }
    }

    #[test]
    fn kernel_preserves_answer(inst in instance(14, 4), k in 1usize..9) {
        let opt = solve_bruteforce(&inst).unwrap().len();
        let answer = match kernelize(&inst, k) {
            KernelOutcome::TrivialYes(sol) => sol.len() >= k,
            KernelOutcome::Kernel(kern) => {
                prop_assert!(kern.len() < k * k);
                solve_bruteforce(&kern).unwrap().len() >= k
            }
        };
        prop_assert_eq!(answer, opt >= k);
    }
}

#[test]
fn rejected_index_lists() {
    let inst = Instance::parse("a b a").unwrap();
    assert!(matches!(
        Solution::validate(&inst, &[1, 2, 3]),
        Err(SolutionError::RepeatedRunSymbol { symbol: 0, .. })
    ));
    assert!(matches!(
        Solution::validate(&inst, &[2, 1]),
        Err(SolutionError::NonIncreasingIndices { .. })
    ));
    assert!(matches!(
        Solution::validate(&inst, &[4]),
        Err(SolutionError::IndexOutOfRange { index: 4, .. })
    ));
    assert_eq!(Solution::validate(&inst, &[]).unwrap().len(), 0);
}
