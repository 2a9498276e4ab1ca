use crate::instance::Instance;
use crate::occ::OccIndex;
use crate::solution::Solution;

/// The longer of one occurrence per symbol and every occurrence of a most
/// frequent symbol. Within a factor `min(|Σ|, occ) <= sqrt(|S|)` of optimal.
pub fn approx_solve(instance: &Instance) -> Solution {
    let occ = OccIndex::build(instance);
    let sigma = instance.alphabet_size();
    let frequent = (0..sigma).max_by_key(|&a| (occ.positions(a).len(), std::cmp::Reverse(a)));
    let Some(a) = frequent else {
        return Solution::empty();
    };
    let indices = if occ.positions(a).len() >= sigma {
        occ.positions(a).to_vec()
    } else {
        let mut firsts: Vec<usize> = (0..sigma).map(|b| occ.positions(b)[0]).collect();
        firsts.sort_unstable();
        firsts
    };
    Solution::validate(instance, &indices).expect("both candidates are run subsequences")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::solve_bruteforce;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn worked_example() {
        let inst = Instance::parse("a b a c a a b b a b").unwrap();
        assert_eq!(approx_solve(&inst).len(), 5);
    }

    #[test]
    fn all_distinct_is_optimal() {
        let inst = Instance::parse("p q r s").unwrap();
        assert_eq!(approx_solve(&inst).len(), 4);
    }

    #[test]
    fn ratio_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..200 {
            let n = rng.gen_range(1..=14);
            let sigma = rng.gen_range(1..=5);
            let toks: Vec<String> = (0..n)
                .map(|_| rng.gen_range(0..sigma).to_string())
                .collect();
            let inst = Instance::from_tokens(&toks).unwrap();
            let opt = solve_bruteforce(&inst).unwrap().len() as f64;
            let apx = approx_solve(&inst).len() as f64;
            let bound = (inst.alphabet_size().min(inst.max_occurrence())) as f64;
            assert!(opt / apx <= bound + 1e-9);
            assert!(opt / apx <= (n as f64).sqrt() + 1e-9);
        }
    }
}
