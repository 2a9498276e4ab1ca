use lrs_core::reductions::{
    canonicalize, gen_random_cubic, is_canonical, mis_bruteforce, misc_decode, misc_encode,
    misc_solution_from_is, BlockId, ReductionError, ReductionMap,
};
use lrs_core::Solution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_solution(map: &ReductionMap, rng: &mut ChaCha8Rng, keep: f64) -> Solution {
    let inst = map.instance();
    let mut used = vec![false; inst.alphabet_size()];
    let mut current = None;
    let mut idx = Vec::new();
    for i in 1..=inst.len() {
        let a = inst.at(i);
        if (current == Some(a) || !used[a]) && rng.gen_bool(keep) {
            used[a] = true;
            current = Some(a);
            idx.push(i);
        }
    }
    Solution::validate(inst, &idx).unwrap()
}

#[test]
fn canonicalize_random_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for case in 0..200u64 {
        let n = [4, 6, 8, 10][case as usize % 4];
        let g = gen_random_cubic(n, case).unwrap();
        let map = misc_encode(&g);
        let keep = rng.gen_range(0.3..1.0);
        let sol = random_solution(&map, &mut rng, keep);
        let canon = canonicalize(&map, &sol).unwrap();
        assert!(canon.len() >= sol.len());
        assert!(is_canonical(&map, &canon));
        assert_eq!(canonicalize(&map, &canon).unwrap(), canon);
        let set = misc_decode(&map, &sol).unwrap();
        assert!(g.is_independent(&set));
        assert_eq!(canon.len(), map.threshold(set.len()));
    }
}

#[test]
fn dropping_a_separator_is_repaired() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for seed in 0..30 {
        let g = gen_random_cubic(8, seed).unwrap();
        let map = misc_encode(&g);
        let mis = mis_bruteforce(&g).unwrap();
        let sol = misc_solution_from_is(&map, &mis).unwrap();
        let seps: Vec<_> = map
            .spans()
            .iter()
            .filter(|s| matches!(s.block, BlockId::Separator(_)))
            .collect();
        let gone = seps[rng.gen_range(0..seps.len())];
        let kept: Vec<usize> = sol
            .indices()
            .iter()
            .copied()
            .filter(|&i| i < gone.start || i > gone.end)
            .collect();
        let damaged = Solution::validate(map.instance(), &kept).unwrap();
        assert!(canonicalize(&map, &damaged).unwrap().len() >= sol.len());
    }
}

#[test]
fn encoding_invariants() {
    for seed in 0..20 {
        let g = gen_random_cubic(10, seed).unwrap();
        let map = misc_encode(&g);
        let inst = map.instance();
        assert_eq!(inst.alphabet_size(), 4 * g.n() + 7 * g.m());
        assert_eq!(inst.len(), 5 * g.n() + 6 * g.m() + 3 * (g.n() + g.m()));
        assert!(inst.max_occurrence() <= 2);
        let spans = map.spans();
        assert_eq!(spans.first().unwrap().start, 1);
        assert!(spans.windows(2).all(|w| w[0].end + 1 == w[1].start));
        assert_eq!(spans.last().unwrap().end, inst.len());
    }
}

#[test]
fn decoding_rejects_foreign_solutions() {
    let map = misc_encode(&gen_random_cubic(4, 0).unwrap());
    let long = lrs_core::Instance::from_tokens(vec!["a"; 200]).unwrap();
    let bogus = Solution::validate(&long, &[150]).unwrap();
    assert!(matches!(
        misc_decode(&map, &bogus),
        Err(ReductionError::InvalidSolution(_))
    ));
}
