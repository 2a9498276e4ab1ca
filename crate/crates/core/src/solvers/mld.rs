//! Randomized detection of run subsequences with a prescribed number of runs.
//!
//! A run subsequence is described by its *structure*: the sequence of
//! `(symbol, run length)` pairs, left to right. Every structure that embeds in
//! `S` is counted once, at the position where its greedy leftmost embedding
//! ends. With `P[l][i][h]` the sum over structures with `l` runs and length
//! `h` whose greedy embedding ends within `S[1..i]`:
//!
//! ```text
//! P[l][i][h] = P[l][i-1][h]
//!            + x_a * Σ_z c(l,a,z) * ( P[l-1][p_{m-z+1} - 1][h-z] - P[l-1][p_{m-z} - 1][h-z] )
//! ```
//!
//! where `a = S[i]`, `p_1 < … < p_m = i` are the positions of `a` in `S[1..i]`
//! and the subtracted term is absent for `z = m`. The difference selects the
//! prefixes whose greedy end leaves exactly `z` copies of `a` up to `i`.
//!
//! Each structure contributes `Π x_{a_t} · Π c(t, a_t, z_t)`, so distinct
//! structures never share a term. Evaluated in `GF(2^64)[Z_2^r]` with
//! `x_a ↦ w_a (e_0 + e_{v_a})`, every term with a repeated symbol vanishes
//! and the rest survive with constant probability per trial.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SolverError;
use crate::gf2::{self, VarAssignment, MAX_GROUP_DIM};
use crate::instance::{Instance, SymbolId};
use crate::occ::OccIndex;

pub const DEFAULT_TRIALS: usize = 20;

/// Values carried on the wires of the run circuit.
pub trait WireAlgebra {
    type Wire: Clone;

    fn zero(&self) -> Self::Wire;
    /// The multiplicative unit, the value of the empty structure.
    fn unit(&self) -> Self::Wire;
    fn is_zero(&self, w: &Self::Wire) -> bool;
    fn clear(&self, w: &mut Self::Wire);
    fn add_assign(&self, dst: &mut Self::Wire, src: &Self::Wire);
    /// `dst += c(level, a, z) * src`.
    fn add_tagged(
        &self,
        dst: &mut Self::Wire,
        src: &Self::Wire,
        level: usize,
        a: SymbolId,
        z: usize,
    );
    /// `dst -= c(level, a, z) * src`.
    fn sub_tagged(
        &self,
        dst: &mut Self::Wire,
        src: &Self::Wire,
        level: usize,
        a: SymbolId,
        z: usize,
    );
    /// `dst = x_a * src`.
    fn mul_var(&self, dst: &mut Self::Wire, src: &Self::Wire, a: SymbolId);
}

/// Evaluation under one random assignment, in `GF(2^64)[Z_2^r]`.
pub struct FingerprintAlgebra<'a> {
    assignment: &'a VarAssignment,
    width: usize,
}

impl<'a> FingerprintAlgebra<'a> {
    pub fn new(assignment: &'a VarAssignment) -> Self {
        FingerprintAlgebra {
            assignment,
            width: 1 << assignment.dim(),
        }
    }
}

impl WireAlgebra for FingerprintAlgebra<'_> {
    type Wire = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.width]
    }

    fn unit(&self) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    fn is_zero(&self, w: &Vec<u64>) -> bool {
        gf2::is_zero(w)
    }

    fn clear(&self, w: &mut Vec<u64>) {
        w.fill(0);
    }

    fn add_assign(&self, dst: &mut Vec<u64>, src: &Vec<u64>) {
        gf2::add_into(dst, src);
    }

    fn add_tagged(&self, dst: &mut Vec<u64>, src: &Vec<u64>, level: usize, a: SymbolId, z: usize) {
        gf2::scale_add_into(dst, src, self.assignment.run_scalar(level, a, z).0);
    }

    fn sub_tagged(&self, dst: &mut Vec<u64>, src: &Vec<u64>, level: usize, a: SymbolId, z: usize) {
        self.add_tagged(dst, src, level, a, z);
    }

    fn mul_var(&self, dst: &mut Vec<u64>, src: &Vec<u64>, a: SymbolId) {
        let asg = self.assignment;
        gf2::mul_var_into(dst, src, asg.group_elem(a), asg.scalar(a).0);
    }
}

/// Evaluates the circuit layer by layer and hands every finished layer
/// `P[l][i][h]` (row-major in `i`, then `h = 0..=kmax`) to `visit`.
pub(crate) fn evaluate_layers<A: WireAlgebra>(
    alg: &A,
    instance: &Instance,
    r: usize,
    kmax: usize,
    mut visit: impl FnMut(usize, &[A::Wire]),
) {
    let n = instance.len();
    let stride = kmax + 1;
    let occ = OccIndex::build(instance);

    let mut prev = vec![alg.zero(); (n + 1) * stride];
    for i in 0..=n {
        prev[i * stride] = alg.unit();
    }
    visit(0, &prev);
    let mut cur = prev.clone();
    let mut acc = alg.zero();
    let mut term = alg.zero();

    for l in 1..=r {
        for w in cur[..stride].iter_mut() {
            alg.clear(w);
        }
        for i in 1..=n {
            let a = instance.at(i);
            let m = occ.count_prefix(a, i);
            let pos = &occ.positions(a)[..m];
            let (done, rest) = cur.split_at_mut(i * stride);
            let before = &done[(i - 1) * stride..];
            let row = &mut rest[..stride];
            for h in 0..stride {
                row[h].clone_from(&before[h]);
                if h < l {
                    continue;
                }
                alg.clear(&mut acc);
                for z in 1..=m.min(h + 1 - l) {
                    let upper = pos[m - z] - 1;
                    alg.add_tagged(&mut acc, &prev[upper * stride + h - z], l, a, z);
                    if z < m {
                        let lower = pos[m - z - 1] - 1;
                        alg.sub_tagged(&mut acc, &prev[lower * stride + h - z], l, a, z);
                    }
                }
                alg.mul_var(&mut term, &acc, a);
                alg.add_assign(&mut row[h], &term);
            }
        }
        visit(l, &cur);
        std::mem::swap(&mut prev, &mut cur);
    }
}

/// Returns `P[r][n][h]` for `h = 0..=kmax`.
pub fn evaluate_run_circuit<A: WireAlgebra>(
    alg: &A,
    instance: &Instance,
    r: usize,
    kmax: usize,
) -> Vec<A::Wire> {
    let n = instance.len();
    let stride = kmax + 1;
    let mut out = Vec::new();
    evaluate_layers(alg, instance, r, kmax, |l, layer| {
        if l == r {
            out = layer[n * stride..].to_vec();
        }
    });
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MldParams {
    pub trials: usize,
    pub seed: u64,
}

impl Default for MldParams {
    fn default() -> Self {
        MldParams {
            trials: DEFAULT_TRIALS,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KVerdict {
    pub k: usize,
    /// Seed of the first trial that evaluated nonzero.
    pub witness: Option<u64>,
}

impl KVerdict {
    pub fn is_yes(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialReport {
    pub master_seed: u64,
    pub r: usize,
    pub trials: usize,
    /// Trials actually evaluated (a yes can stop early).
    pub trials_run: usize,
    pub verdicts: Vec<KVerdict>,
    pub elapsed: Duration,
}

impl TrialReport {
    pub fn verdict(&self, k: usize) -> Option<&KVerdict> {
        self.verdicts.iter().find(|v| v.k == k)
    }

    pub fn max_yes(&self) -> Option<usize> {
        self.verdicts
            .iter()
            .filter(|v| v.is_yes())
            .map(|v| v.k)
            .max()
    }
}

/// Per-trial seeds, drawn from the master seed.
pub fn trial_seeds(master: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    (0..trials).map(|_| rng.gen()).collect()
}

fn check_params(instance: &Instance, r: usize, trials: usize) -> Result<(), SolverError> {
    let sigma = instance.alphabet_size();
    if r == 0 || r > sigma {
        return Err(SolverError::ParameterOutOfRange(format!(
            "r = {r} must lie in 1..={sigma} (alphabet size)"
        )));
    }
    if r > MAX_GROUP_DIM as usize {
        return Err(SolverError::ParameterOutOfRange(format!(
            "r = {r} exceeds the group dimension cap {MAX_GROUP_DIM}"
        )));
    }
    if trials == 0 {
        return Err(SolverError::ParameterOutOfRange(
            "at least one trial is required".into(),
        ));
    }
    Ok(())
}

fn trial_row(instance: &Instance, r: usize, kmax: usize, seed: u64) -> Vec<bool> {
    let asg = VarAssignment::draw(instance, r as u32, seed).expect("dimension checked");
    let alg = FingerprintAlgebra::new(&asg);
    evaluate_run_circuit(&alg, instance, r, kmax)
        .iter()
        .map(|w| !alg.is_zero(w))
        .collect()
}

/// Decides whether some run subsequence has exactly `r` runs and length
/// exactly `k`. A yes is always correct; a no is wrong with probability at
/// most `0.72^trials`.
pub fn mld_decide(
    instance: &Instance,
    r: usize,
    k: usize,
    params: MldParams,
) -> Result<TrialReport, SolverError> {
    check_params(instance, r, params.trials)?;
    if k < r || k > instance.len() {
        return Err(SolverError::ParameterOutOfRange(format!(
            "k = {k} must lie in {r}..={}",
            instance.len()
        )));
    }
    let start = Instant::now();
    let mut witness = None;
    let mut trials_run = 0;
    for seed in trial_seeds(params.seed, params.trials) {
        trials_run += 1;
        if trial_row(instance, r, k, seed)[k] {
            witness = Some(seed);
            break;
        }
    }
    Ok(TrialReport {
        master_seed: params.seed,
        r,
        trials: params.trials,
        trials_run,
        verdicts: vec![KVerdict { k, witness }],
        elapsed: start.elapsed(),
    })
}

/// Largest `k` with a yes verdict for exactly `r` runs. Every trial evaluates
/// the whole row `k = r..=|S|`, so the report carries a verdict for each `k`.
pub fn mld_solve_for_runs(
    instance: &Instance,
    r: usize,
    params: MldParams,
) -> Result<(usize, TrialReport), SolverError> {
    check_params(instance, r, params.trials)?;
    let start = Instant::now();
    let n = instance.len();
    let mut verdicts: Vec<KVerdict> = (r..=n).map(|k| KVerdict { k, witness: None }).collect();
    for seed in trial_seeds(params.seed, params.trials) {
        let row = trial_row(instance, r, n, seed);
        for v in verdicts.iter_mut().filter(|v| v.witness.is_none()) {
            if row[v.k] {
                v.witness = Some(seed);
            }
        }
    }
    let report = TrialReport {
        master_seed: params.seed,
        r,
        trials: params.trials,
        trials_run: params.trials,
        verdicts,
        elapsed: start.elapsed(),
    };
    match report.max_yes() {
        Some(k) => Ok((k, report)),
        None => Err(SolverError::NoSolutionFound {
            r,
            trials: params.trials,
        }),
    }
}
