//! Command-line front end for `lrs-core`.
//!
//! Exit codes: 0 success or threshold met, 1 threshold unmet, 2 usage or
//! parse error, 3 internal limit exceeded.

pub mod bench;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use lrs_core::generate::{generate_string, Distribution, GenError, GenSpec};
use lrs_core::reductions::{
    cross_compose, gen_random_cubic, misc_encode, CubicGraph, GraphError, ReductionError,
};
use lrs_core::scaffold::scaffold;
use lrs_core::solvers::{
    approx_solve, mld_decide, mld_solve_for_runs, solve_bruteforce, solve_subset_dp, MldParams,
    SolverError, DEFAULT_TRIALS,
};
use lrs_core::{Instance, InstanceError, Solution};

pub const SEED_ENV: &str = "LRS_SEED";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Instance {
        path: PathBuf,
        source: InstanceError,
    },
    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: GraphError },
    #[error(transparent)]
    Generator(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Solver(
                SolverError::InstanceTooLarge { .. }
                | SolverError::AlphabetTooLarge { .. }
                | SolverError::TableTooLarge { .. },
            )
            | CliError::Generator(
                GraphError::GraphTooLarge { .. } | GraphError::RejectionLimitExceeded(_),
            ) => 3,
            CliError::Solver(SolverError::NoSolutionFound { .. }) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lrs",
    version,
    about = "Longest Run Subsequence solvers and instance generators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance and print the solution.
    Solve {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        input: PathBuf,
        /// Target length; exit status 1 if the solution is shorter.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Randomized decision for exactly `r` runs. Without --k, reports the largest length with a yes.
    Decide {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        input: PathBuf,
    },
    /// Build reduction instances.
    #[command(subcommand)]
    Reduce(Reduce),
    /// Generate random instances.
    #[command(subcommand)]
    Gen(Gen),
    /// Solve exactly and print the bins covered by each contig run.
    Scaffold {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a benchmark suite and write CSV rows with the columns
    /// solver,n,sigma,occ_cap,r,k,trials,seed,verdict,length,wall_ms.
    /// Run metadata goes to FILE.meta.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Brute,
    Dp,
    Approx,
}

#[derive(Debug, Subcommand)]
pub enum Reduce {
    /// Encode a cubic graph; writes PREFIX.txt and the role table PREFIX.roles.
    Misc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also print the length threshold for an independent set of size Q.
        #[arg(long)]
        q: Option<usize>,
    },
    /// Compose equally sized instances; writes PREFIX.txt and the input spans PREFIX.spans.
    Compose {
        #[arg(long, num_args = 1.., required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Gen {
    /// Random string over `sigma` symbols.
    String(GenStringArgs),
    /// Random cubic graph.
    Cubic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GenStringArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub sigma: usize,
    #[arg(long)]
    pub occ_cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = DistributionArg::Shuffled)]
    pub distribution: DistributionArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistributionArg {
    Uniform,
    Shuffled,
}

/// Text for standard output and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub exit: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, exit: 0 }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_instance(path: &Path) -> Result<Instance, CliError> {
    Instance::parse(&read(path)?).map_err(|source| CliError::Instance {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

/// Seed from the environment override, if set, else `flag`.
pub fn effective_seed(flag: u64) -> Result<u64, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!("{SEED_ENV}={v:?} is not a 64-bit unsigned integer"))
        }),
        Err(_) => Ok(flag),
    }
}

fn checked(instance: &Instance, sol: &Solution) -> Result<String, CliError> {
    Solution::validate(instance, sol.indices())
        .map_err(|e| CliError::Usage(format!("internal error: invalid solution: {e}")))?;
    Ok(sol.render(instance))
}

pub fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Solve { algo, input, k } => {
            let inst = load_instance(&input)?;
            let sol = match algo {
                Algo::Brute => solve_bruteforce(&inst)?,
                Algo::Dp => solve_subset_dp(&inst)?.solution,
                Algo::Approx => approx_solve(&inst),
            };
            let text = checked(&inst, &sol)?;
            let exit = match k {
                Some(k) if sol.len() < k => 1,
                _ => 0,
            };
            Ok(Report { text, exit })
        }
        Command::Decide {
            r,
            k,
            trials,
            seed,
            input,
        } => {
            let inst = load_instance(&input)?;
            let params = MldParams {
                trials,
                seed: effective_seed(seed)?,
            };
            let mut text = String::new();
            let exit = match k {
                Some(k) => {
                    let report = mld_decide(&inst, r, k, params)?;
                    let v = report.verdicts[0];
                    writeln!(text, "verdict {}", if v.is_yes() { "yes" } else { "no" }).unwrap();
                    writeln!(text, "r {r}\nk {k}").unwrap();
                    writeln!(text, "trials {} (ran {})", report.trials, report.trials_run).unwrap();
                    writeln!(text, "seed {}", report.master_seed).unwrap();
                    match v.witness {
                        Some(w) => writeln!(text, "witness {w}").unwrap(),
                        None => text.push_str("witness none\n"),
                    }
                    u8::from(!v.is_yes())
                }
                None => {
                    let (max_k, report) = mld_solve_for_runs(&inst, r, params)?;
                    writeln!(text, "max_k {max_k}\nr {r}").unwrap();
                    writeln!(
                        text,
                        "trials {}\nseed {}",
                        report.trials, report.master_seed
                    )
                    .unwrap();
                    let w = report.verdict(max_k).and_then(|v| v.witness).unwrap();
                    writeln!(text, "witness {w}").unwrap();
                    let yes: Vec<String> = report
                        .verdicts
                        .iter()
                        .filter(|v| v.is_yes())
                        .map(|v| v.k.to_string())
                        .collect();
                    writeln!(text, "yes_k {}", yes.join(" ")).unwrap();
                    0
                }
            };
            Ok(Report { text, exit })
        }
        Command::Reduce(Reduce::Misc { graph, out, q }) => {
            let g = CubicGraph::parse(&read(&graph)?).map_err(|source| CliError::Graph {
                path: graph,
                source,
            })?;
            if let Some(q) = q {
                if q > g.n() {
                    return Err(CliError::Usage(format!("q = {q} exceeds n = {}", g.n())));
                }
            }
            let map = misc_encode(&g);
            write(&with_suffix(&out, ".txt"), &map.instance().to_text())?;
            write(&with_suffix(&out, ".roles"), &map.role_table())?;
            let inst = map.instance();
            let mut text = format!(
                "length {}\nalphabet {}\nthreshold_q0 {}\n",
                inst.len(),
                inst.alphabet_size(),
                map.threshold(0)
            );
            if let Some(q) = q {
                writeln!(text, "threshold {}", map.threshold(q)).unwrap();
            }
            Ok(Report::ok(text))
        }
        Command::Reduce(Reduce::Compose { inputs, k, out }) => {
            let instances = inputs
                .iter()
                .map(|p| load_instance(p))
                .collect::<Result<Vec<_>, _>>()?;
            let res = cross_compose(&instances, k)?;
            write(&with_suffix(&out, ".txt"), &res.instance.to_text())?;
            let spans: String = res
                .spans
                .iter()
                .map(|(a, b)| format!("{a} {b}\n"))
                .collect();
            write(&with_suffix(&out, ".spans"), &spans)?;
            Ok(Report::ok(format!(
                "length {}\nalphabet {}\nk_prime {}\n",
                res.instance.len(),
                res.instance.alphabet_size(),
                res.k_prime
            )))
        }
        Command::Gen(Gen::String(args)) => {
            let spec = GenSpec {
                n: args.n,
                sigma: args.sigma,
                occ_cap: args.occ_cap,
                distribution: match args.distribution {
                    DistributionArg::Uniform => Distribution::Uniform,
                    DistributionArg::Shuffled => Distribution::ShuffledMultiset,
                },
                seed: effective_seed(args.seed)?,
            };
            let text = generate_string(&spec)?.to_text();
            emit(args.out.as_deref(), text)
        }
        Command::Gen(Gen::Cubic { n, seed, out }) => {
            let text = gen_random_cubic(n, effective_seed(seed)?)?.to_text();
            emit(out.as_deref(), text)
        }
        Command::Scaffold { input } => {
            let inst = load_instance(&input)?;
            let report = scaffold(&inst)?;
            checked(&inst, &report.solution)?;
            Ok(Report::ok(report.render()))
        }
        Command::Bench(args) => bench::run_bench(&args),
    }
}

fn emit(out: Option<&Path>, text: String) -> Result<Report, CliError> {
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok(Report::ok(String::new()))
        }
        None => Ok(Report::ok(text)),
    }
}
