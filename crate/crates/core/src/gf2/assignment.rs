use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::field::Gf64;
use super::group::MAX_GROUP_DIM;
use crate::instance::{Instance, SymbolId};

/// Name of the generator behind every random draw, recorded in bench metadata.
pub const RNG_ALGORITHM: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64)";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssignmentError {
    #[error("group dimension must be in 1..={MAX_GROUP_DIM}, got {0}")]
    BadDimension(u32),
}

/// Random images of the circuit variables for one detection trial.
///
/// Symbol `a` maps to `w_a * (e_0 + e_{v_a})`. The run scalars `c[l][a][z]`
/// tag the gate that appends an `a`-run of length `z` as the `l`-th run, so
/// distinct run structures over the same symbol set carry distinct scalar
/// products and cannot cancel in characteristic 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarAssignment {
    seed: u64,
    dim: u32,
    group: Vec<usize>,
    scalars: Vec<Gf64>,
    run_scalars: Vec<u64>,
    offsets: Vec<usize>,
    level_stride: usize,
}

fn nonzero(rng: &mut ChaCha8Rng) -> u64 {
    loop {
        let x: u64 = rng.gen();
        if x != 0 {
            return x;
        }
    }
}

impl VarAssignment {
    /// Draws an assignment for group dimension `r`, deterministically from `seed`.
    pub fn draw(instance: &Instance, r: u32, seed: u64) -> Result<Self, AssignmentError> {
        if r == 0 || r > MAX_GROUP_DIM {
            return Err(AssignmentError::BadDimension(r));
        }
        let sigma = instance.alphabet_size();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let group = (0..sigma).map(|_| rng.gen_range(0..1usize << r)).collect();
        let scalars = (0..sigma).map(|_| Gf64(nonzero(&mut rng))).collect();

        let counts = instance.occurrence_counts();
        let mut offsets = Vec::with_capacity(sigma);
        let mut acc = 0;
        for c in &counts {
            offsets.push(acc);
            acc += c;
        }
        let level_stride = acc;
        let run_scalars = (0..r as usize * level_stride)
            .map(|_| nonzero(&mut rng))
            .collect();
        Ok(VarAssignment {
            seed,
            dim: r,
            group,
            scalars,
            run_scalars,
            offsets,
            level_stride,
        })
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `v_a`, a group element in `0..2^r`.
    pub fn group_elem(&self, a: SymbolId) -> usize {
        self.group[a]
    }

    /// `w_a`, never zero.
    pub fn scalar(&self, a: SymbolId) -> Gf64 {
        self.scalars[a]
    }

    /// Scalar for appending an `a`-run of length `z` as run number `level`
    /// (both 1-based; `z` at most the occurrence count of `a`).
    pub fn run_scalar(&self, level: usize, a: SymbolId, z: usize) -> Gf64 {
        Gf64(self.run_scalars[(level - 1) * self.level_stride + self.offsets[a] + z - 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Instance {
        Instance::parse("a b a c a a b b a b").unwrap()
    }

    #[test]
    fn deterministic_per_seed() {
        let inst = example();
        let a = VarAssignment::draw(&inst, 4, 99).unwrap();
        let b = VarAssignment::draw(&inst, 4, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.seed(), 99);
    }

    #[test]
    fn neighbouring_seeds_differ() {
        let inst = example();
        let mut collisions = 0;
        for s in 0..100u64 {
            let a = VarAssignment::draw(&inst, 3, s).unwrap();
            let b = VarAssignment::draw(&inst, 3, s ^ 1).unwrap();
            if a.scalars == b.scalars && a.group == b.group {
                collisions += 1;
            }
        }
        assert_eq!(collisions, 0);
    }

    #[test]
    fn ranges() {
        let inst = example();
        for s in 0..50 {
            let asg = VarAssignment::draw(&inst, 1, s).unwrap();
            for a in 0..3 {
                assert!(asg.group_elem(a) < 2);
                assert!(!asg.scalar(a).is_zero());
            }
            for l in 1..=1 {
                for (a, &c) in inst.occurrence_counts().iter().enumerate() {
                    for z in 1..=c {
                        assert!(!asg.run_scalar(l, a, z).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn zero_group_element_is_drawn_sometimes() {
        let inst = example();
        let hit = (0..200).any(|s| {
            let asg = VarAssignment::draw(&inst, 1, s).unwrap();
            (0..3).any(|a| asg.group_elem(a) == 0)
        });
        assert!(hit);
    }

    #[test]
    fn rejects_bad_dimension() {
        assert!(VarAssignment::draw(&example(), 0, 1).is_err());
        assert!(VarAssignment::draw(&example(), 25, 1).is_err());
    }
}
