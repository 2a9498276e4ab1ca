//! Benchmark suites writing one CSV row per solver run.

use std::fs;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use lrs_core::generate::{generate_string, Distribution, GenSpec};
use lrs_core::gf2::{REDUCTION_POLYNOMIAL, RNG_ALGORITHM};
use lrs_core::solvers::{
    mld_solve_for_runs, solve_subset_dp, MldParams, SolverError, DEFAULT_TRIALS,
};

use crate::{effective_seed, with_suffix, CliError, Report};

pub const COLUMNS: &str = "solver,n,sigma,occ_cap,r,k,trials,seed,verdict,length,wall_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// n = 40, |Σ| = 20, r = 2..=8.
    ScalingR,
    /// r = 4, n = 10..=60 in steps of 10, |Σ| = n/2.
    ScalingN,
    /// Exact-r profile of the subset DP against detection, on small strings.
    DpVsMld,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run independent jobs on all cores; row order may change, row content does not.
    #[arg(long)]
    pub parallel: bool,
    #[arg(long, default_value_t = 5)]
    pub repetitions: usize,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub solver: &'static str,
    pub n: usize,
    pub sigma: usize,
    pub occ_cap: Option<usize>,
    pub r: usize,
    pub k: Option<usize>,
    pub trials: Option<usize>,
    pub seed: u64,
    pub verdict: &'static str,
    pub length: Option<usize>,
    pub wall_ms: f64,
}

/// One instance, and the run counts to try on it.
#[derive(Debug, Clone)]
struct Job {
    spec: GenSpec,
    runs: Vec<usize>,
    compare: bool,
}

fn spec(n: usize, sigma: usize, occ_cap: Option<usize>, seed: u64) -> GenSpec {
    GenSpec {
        n,
        sigma,
        occ_cap,
        distribution: Distribution::ShuffledMultiset,
        seed,
    }
}

fn jobs(suite: Suite, master: u64, repetitions: usize) -> Vec<Job> {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    let mut out = Vec::new();
    for _ in 0..repetitions {
        match suite {
            Suite::ScalingR => {
                for r in 2..=8 {
                    out.push(Job {
                        spec: spec(40, 20, None, rng.gen()),
                        runs: vec![r],
                        compare: false,
                    });
                }
            }
            Suite::ScalingN => {
                for n in (10..=60).step_by(10) {
                    out.push(Job {
                        spec: spec(n, n / 2, None, rng.gen()),
                        runs: vec![4],
                        compare: false,
                    });
                }
            }
            Suite::DpVsMld => {
                for i in 0..20 {
                    let sigma = rng.gen_range(2..=5);
                    let mut n = rng.gen_range(8..=16);
                    let cap = if i % 2 == 0 {
                        n = n.min(2 * sigma);
                        Some(2)
                    } else {
                        None
                    };
                    out.push(Job {
                        spec: spec(n, sigma, cap, rng.gen()),
                        runs: (1..=sigma).collect(),
                        compare: true,
                    });
                }
            }
        }
    }
    out
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn run_job(job: &Job, trials: usize) -> Result<Vec<BenchRecord>, CliError> {
    let inst = generate_string(&job.spec)?;
    let (n, sigma, cap, seed) = (
        inst.len(),
        inst.alphabet_size(),
        job.spec.occ_cap,
        job.spec.seed,
    );
    let profile = if job.compare {
        let start = Instant::now();
        let dp = solve_subset_dp(&inst)?;
        Some((dp.profile, millis(start)))
    } else {
        None
    };
    let mut rows = Vec::new();
    for &r in &job.runs {
        let start = Instant::now();
        let found = match mld_solve_for_runs(&inst, r, MldParams { trials, seed }) {
            Ok((k, _)) => Some(k),
            Err(SolverError::NoSolutionFound { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        let wall_ms = millis(start);
        let mld_verdict = if found.is_some() { "yes" } else { "no" };
        match &profile {
            Some((profile, dp_ms)) => {
                let verdict = if found == Some(profile[r]) {
                    "agree"
                } else {
                    "disagree"
                };
                rows.push(BenchRecord {
                    solver: "subset-dp",
                    n,
                    sigma,
                    occ_cap: cap,
                    r,
                    k: Some(profile[r]),
                    trials: None,
                    seed,
                    verdict,
                    length: Some(profile[r]),
                    wall_ms: *dp_ms,
                });
                rows.push(BenchRecord {
                    solver: "mld",
                    n,
                    sigma,
                    occ_cap: cap,
                    r,
                    k: found,
                    trials: Some(trials),
                    seed,
                    verdict,
                    length: found,
                    wall_ms,
                });
            }
            None => rows.push(BenchRecord {
                solver: "mld",
                n,
                sigma,
                occ_cap: cap,
                r,
                k: found,
                trials: Some(trials),
                seed,
                verdict: mld_verdict,
                length: found,
                wall_ms,
            }),
        }
    }
    Ok(rows)
}

pub fn run_bench(args: &BenchArgs) -> Result<Report, CliError> {
    let master = effective_seed(args.seed)?;
    let jobs = jobs(args.suite, master, args.repetitions);
    let writer = Mutex::new(csv::Writer::from_path(&args.out)?);
    let counts = Mutex::new((0usize, 0usize));
    let emit = |rows: Vec<BenchRecord>| -> Result<(), CliError> {
        let mut w = writer.lock().unwrap();
        let mut c = counts.lock().unwrap();
        for row in rows {
            c.0 += 1;
            c.1 += usize::from(row.verdict == "disagree" && row.solver == "mld");
            w.serialize(row)?;
        }
        Ok(())
    };

    if args.parallel {
        let next = AtomicUsize::new(0);
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        let results: Vec<Result<(), CliError>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    s.spawn(|| loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(job) = jobs.get(i) else {
                            return Ok(());
                        };
                        emit(run_job(job, args.trials)?)?;
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        results.into_iter().collect::<Result<(), _>>()?;
    } else {
        for job in &jobs {
            emit(run_job(job, args.trials)?)?;
        }
    }
    writer
        .into_inner()
        .unwrap()
        .flush()
        .map_err(|source| CliError::Io {
            path: args.out.clone(),
            source,
        })?;

    let suite = args
        .suite
        .to_possible_value()
        .unwrap()
        .get_name()
        .to_string();
    let meta = format!(
        "suite {suite}\nmaster_seed {master}\nrepetitions {}\ntrials {}\nparallel {}\nreduction_polynomial {REDUCTION_POLYNOMIAL}\nrng {RNG_ALGORITHM}\ncolumns {COLUMNS}\n",
        args.repetitions, args.trials, args.parallel
    );
    let meta_path = with_suffix(&args.out, ".meta");
    fs::write(&meta_path, meta).map_err(|source| CliError::Io {
        path: meta_path,
        source,
    })?;

    let (rows, disagreements) = counts.into_inner().unwrap();
    let mut text = format!("suite {suite}\nrows {rows}\n");
    if args.suite == Suite::DpVsMld {
        text.push_str(&format!("disagreements {disagreements}\n"));
    }
    Ok(Report { text, exit: 0 })
}
