//! OR-composition of equally sized instances into one.
//!
//! Given `t` strings of length `n` over alphabets of size `m` and a target
//! `k`, each alphabet is renamed onto `1..=m` (by lexicographic token order)
//! and the strings are framed by fresh symbols:
//!
//! ```text
//! S' = $^{2n} σ(S_1) #^{2n} $^{2n} σ(S_2) #^{2n} … $^{2n} σ(S_t) #^{2n}
//! k' = k + (t+1) 2n
//! ```
//!
//! Then `S'` has a run subsequence of length `k'` iff some `S_i` has one of length `k`.

use super::ReductionError;
use crate::instance::Instance;

pub const DOLLAR_TOKEN: &str = "SEP_DOLLAR";
pub const HASH_TOKEN: &str = "SEP_HASH";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionResult {
    pub instance: Instance,
    pub k_prime: usize,
    /// Positions `start..=end` (1-based) of each renamed input inside `S'`.
    pub spans: Vec<(usize, usize)>,
    pub n: usize,
    pub m: usize,
    pub t: usize,
}

pub fn cross_compose(
    instances: &[Instance],
    k: usize,
) -> Result<CompositionResult, ReductionError> {
    let first = instances.first().ok_or(ReductionError::NoInstances)?;
    let (n, m) = (first.len(), first.alphabet_size());
    for (index, inst) in instances.iter().enumerate() {
        for (dimension, expected, found) in [
            ("length", n, inst.len()),
            ("alphabet size", m, inst.alphabet_size()),
        ] {
            if expected != found {
                return Err(ReductionError::HeterogeneousInstances {
                    dimension,
                    index,
                    expected,
                    found,
                });
            }
        }
    }

    let t = instances.len();
    let mut tokens: Vec<String> = Vec::with_capacity(t * 5 * n);
    let mut spans = Vec::with_capacity(t);
    for inst in instances {
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| inst.token(a).cmp(inst.token(b)));
        let mut rename = vec![0; m];
        for (rank, &id) in order.iter().enumerate() {
            rename[id] = rank + 1;
        }
        tokens.extend(std::iter::repeat(DOLLAR_TOKEN.to_string()).take(2 * n));
        let start = tokens.len() + 1;
        tokens.extend(inst.symbols().iter().map(|&a| rename[a].to_string()));
        spans.push((start, tokens.len()));
        tokens.extend(std::iter::repeat(HASH_TOKEN.to_string()).take(2 * n));
    }
    let k_prime = k + (t + 1) * 2 * n;
    let instance = Instance::from_tokens(&tokens)
        .expect("renamed tokens are well formed")
        .with_k(k_prime);
    Ok(CompositionResult {
        instance,
        k_prime,
        spans,
        n,
        m,
        t,
    })
}
