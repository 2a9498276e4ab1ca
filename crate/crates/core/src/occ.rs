//! Occurrence index: per-symbol positions and prefix counts.

use crate::instance::{Instance, SymbolId};

#[derive(Debug, Clone)]
pub struct OccIndex {
    positions: Vec<Vec<usize>>,
    // prefix[a][i] = occurrences of `a` in S[1..i]; prefix[a][0] = 0.
    prefix: Vec<Vec<u32>>,
}

impl OccIndex {
    pub fn build(instance: &Instance) -> Self {
        let sigma = instance.alphabet_size();
        let n = instance.len();
        let mut positions = vec![Vec::new(); sigma];
        let mut prefix = vec![vec![0u32; n + 1]; sigma];
        for (i, &s) in instance.symbols().iter().enumerate() {
            positions[s].push(i + 1);
            for (a, row) in prefix.iter_mut().enumerate() {
                row[i + 1] = row[i] + u32::from(a == s);
            }
        }
        OccIndex { positions, prefix }
    }

    /// Sorted 1-based positions of `a`.
    pub fn positions(&self, a: SymbolId) -> &[usize] {
        &self.positions[a]
    }

    /// Occurrences of `a` in `S[1..i]`.
    pub fn count_prefix(&self, a: SymbolId, i: usize) -> usize {
        self.prefix[a][i] as usize
    }

    /// Occurrences of `a` in the window `S[from..=to]` (1-based, inclusive).
    /// An empty window (`from > to`) counts zero.
    pub fn occ(&self, a: SymbolId, from: usize, to: usize) -> usize {
        if from > to {
            return 0;
        }
        (self.prefix[a][to] - self.prefix[a][from - 1]) as usize
    }

    pub fn alphabet_size(&self) -> usize {
        self.positions.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_examples() {
        let inst = Instance::parse("a b a").unwrap();
        let idx = OccIndex::build(&inst);
        assert_eq!(idx.positions(0), &[1, 3]);
        assert_eq!(idx.positions(1), &[2]);

        let inst = Instance::parse("a a a").unwrap();
        let idx = OccIndex::build(&inst);
        assert_eq!(idx.occ(0, 1, 3), 3);
        assert_eq!(idx.occ(0, 2, 3), 2);
        assert_eq!(idx.occ(0, 3, 2), 0);
    }

    #[test]
    fn worked_example_positions_match_scan() {
        let text = "a b a c a a b b a b";
        let inst = Instance::parse(text).unwrap();
        let idx = OccIndex::build(&inst);
        for tok in ["a", "b", "c"] {
            let scan: Vec<usize> = text
                .split_whitespace()
                .enumerate()
                .filter(|(_, t)| *t == tok)
                .map(|(i, _)| i + 1)
                .collect();
            assert_eq!(idx.positions(inst.id_of(tok).unwrap()), scan.as_slice());
        }
        assert_eq!(idx.positions(0), &[1, 3, 5, 6, 9]);
        assert_eq!(idx.positions(1), &[2, 7, 8, 10]);
        assert_eq!(idx.positions(2), &[4]);
    }

    #[test]
    fn window_queries_agree_with_direct_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(1..40);
            let sigma = rng.gen_range(1..6);
            let toks: Vec<String> = (0..n)
                .map(|_| rng.gen_range(0..sigma).to_string())
                .collect();
            let inst = Instance::from_tokens(&toks).unwrap();
            let idx = OccIndex::build(&inst);
            let total: usize = (0..inst.alphabet_size())
                .map(|a| idx.positions(a).len())
                .sum();
            assert_eq!(total, n);
            for a in 0..inst.alphabet_size() {
                assert!(idx.positions(a).windows(2).all(|w| w[0] < w[1]));
            }
            for _ in 0..1000 {
                let a = rng.gen_range(0..inst.alphabet_size());
                let j = rng.gen_range(0..n);
                let i = rng.gen_range(j..=n);
                let direct = inst.symbols()[j..i].iter().filter(|&&s| s == a).count();
                assert_eq!(idx.occ(a, j + 1, i), direct);
            }
        }
    }
}
