//! Seeded random string generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::instance::Instance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    ParameterError(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Distribution {
    /// Each position draws a symbol uniformly among those still under the cap.
    Uniform,
    /// Every symbol occurs at least once; the remaining positions are spread
    /// at random under the cap and the multiset is shuffled.
    #[default]
    ShuffledMultiset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub sigma: usize,
    pub occ_cap: Option<usize>,
    pub distribution: Distribution,
    pub seed: u64,
}

/// Token for symbol number `i`: `a..z`, then `aa`, `ab`, … (bijective base 26).
pub fn symbol_name(mut i: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

pub fn generate_string(spec: &GenSpec) -> Result<Instance, GenError> {
    let GenSpec { n, sigma, .. } = *spec;
    let cap = spec.occ_cap.unwrap_or(n);
    let err = |msg: String| Err(GenError::ParameterError(msg));
    if sigma == 0 || n == 0 {
        return err(format!("n = {n} and sigma = {sigma} must both be positive"));
    }
    if cap == 0 || cap.saturating_mul(sigma) < n {
        return err(format!(
            "occurrence cap {cap} times sigma {sigma} is below n = {n}"
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut counts = vec![0usize; sigma];
    let symbols: Vec<usize> = match spec.distribution {
        Distribution::ShuffledMultiset => {
            if n < sigma {
                return err(format!("n = {n} is below sigma = {sigma}"));
            }
            let mut seq: Vec<usize> = (0..sigma).collect();
            counts.fill(1);
            while seq.len() < n {
                let open: Vec<usize> = (0..sigma).filter(|&a| counts[a] < cap).collect();
                let a = open[rng.gen_range(0..open.len())];
                counts[a] += 1;
                seq.push(a);
            }
            seq.shuffle(&mut rng);
            seq
        }
        Distribution::Uniform => (0..n)
            .map(|_| {
                let open: Vec<usize> = (0..sigma).filter(|&a| counts[a] < cap).collect();
                let a = open[rng.gen_range(0..open.len())];
                counts[a] += 1;
                a
            })
            .collect(),
    };
    Ok(Instance::from_tokens(symbols.into_iter().map(symbol_name))
        .expect("generated tokens are well formed"))
}
