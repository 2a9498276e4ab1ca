//! Cubic graphs: validation, the plain-text graph format, random generation
//! and an exhaustive maximum independent set oracle.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const MIS_MAX_VERTICES: usize = 20;
pub const PAIRING_RETRIES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("vertex count {0} is odd")]
    OddVertexCount(usize),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("edge ({i}, {j}) is not a pair of distinct vertices in 1..={n}")]
    BadEdge { i: usize, j: usize, n: usize },
    #[error("edge ({i}, {j}) listed twice")]
    DuplicateEdge { i: usize, j: usize },
    #[error("random cubic graphs need an even n >= 4, got {0}")]
    InvalidN(usize),
    #[error("no simple pairing found after {0} attempts")]
    RejectionLimitExceeded(usize),
    #[error("graph has {n} vertices; exhaustive search is capped at {cap}")]
    GraphTooLarge { n: usize, cap: usize },
}

/// A simple 3-regular graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<[usize; 3]>,
}

impl CubicGraph {
    /// Validates and normalizes an edge list: pairs become `(i, j)` with
    /// `i < j` and the list is sorted lexicographically.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n % 2 == 1 {
            return Err(GraphError::OddVertexCount(n));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let (i, j) = (a.min(b), a.max(b));
            if i == j || i == 0 || j > n {
                return Err(GraphError::BadEdge { i: a, j: b, n });
            }
            norm.push((i, j));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                i: w[0].0,
                j: w[0].1,
            });
        }
        let mut adj = vec![Vec::new(); n + 1];
        for &(i, j) in &norm {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut neighbors = Vec::with_capacity(n);
        for (v, list) in adj.iter_mut().enumerate().skip(1) {
            if list.len() != 3 {
                return Err(GraphError::NotCubic {
                    vertex: v,
                    degree: list.len(),
                });
            }
            list.sort_unstable();
            neighbors.push([list[0], list[1], list[2]]);
        }
        Ok(CubicGraph {
            n,
            edges: norm,
            neighbors,
        })
    }

    /// Parses `n m` followed by `m` lines `i j`. Blank lines and `//`
    /// comment lines are skipped.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with("//"));
        let pair = |line: usize, s: &str| -> Result<(usize, usize), GraphError> {
            let bad = |reason: &str| GraphError::Parse {
                line,
                reason: reason.to_string(),
            };
            let nums: Vec<usize> = s
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| bad(&format!("{t:?} is not a non-negative integer")))
                })
                .collect::<Result<_, _>>()?;
            match nums[..] {
                [a, b] => Ok((a, b)),
                _ => Err(bad("expected two integers")),
            }
        };
        let (hl, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            reason: "missing header".into(),
        })?;
        let (n, m) = pair(hl, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, s) in lines {
            edges.push(pair(line, s)?);
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: hl,
                reason: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Self::new(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (i, j) in &self.edges {
            writeln!(out, "{i} {j}").unwrap();
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(i, j)`, `i < j`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` (1-based) in increasing order.
    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        self.neighbors[v - 1]
    }

    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.edges.binary_search(&key).ok()
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.n + 1];
        for &v in set {
            if v == 0 || v > self.n {
                return false;
            }
            inside[v] = true;
        }
        self.edges.iter().all(|&(i, j)| !(inside[i] && inside[j]))
    }

    pub fn complete4() -> Self {
        Self::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
    }
}

/// A maximum independent set, as sorted 1-based vertices. Among maximum sets
/// the one with the smallest bitmask (vertex `v` is bit `v - 1`) is returned.
pub fn mis_bruteforce(graph: &CubicGraph) -> Result<Vec<usize>, GraphError> {
    let n = graph.n();
    if n > MIS_MAX_VERTICES {
        return Err(GraphError::GraphTooLarge {
            n,
            cap: MIS_MAX_VERTICES,
        });
    }
    let conflict: Vec<u32> = (1..=n)
        .map(|v| {
            graph
                .neighbors(v)
                .iter()
                .fold(0, |acc, &u| acc | 1 << (u - 1))
        })
        .collect();
    let mut best = 0u32;
    for mask in 0u32..1 << n {
        if mask.count_ones() <= best.count_ones() {
            continue;
        }
        let independent = (0..n).all(|v| mask >> v & 1 == 0 || mask & conflict[v] == 0);
        if independent {
            best = mask;
        }
    }
    Ok((0..n)
        .filter(|v| best >> v & 1 == 1)
        .map(|v| v + 1)
        .collect())
}

/// Random cubic graph from the pairing model: `3n` half-edges are shuffled
/// and paired, and pairings with loops or parallel edges are redrawn.
pub fn gen_random_cubic(n: usize, seed: u64) -> Result<CubicGraph, GraphError> {
    if n < 4 || n % 2 == 1 {
        return Err(GraphError::InvalidN(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3 + 1).collect();
    for _ in 0..PAIRING_RETRIES {
        points.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = CubicGraph::new(n, &edges) {
            return Ok(g);
        }
    }
    Err(GraphError::RejectionLimitExceeded(PAIRING_RETRIES))
}
