//! Encoding of maximum independent set on cubic graphs as a string in which
//! every symbol occurs at most twice.
//!
//! For each vertex `v_i` with neighbors `j < h < z`, for each edge `{v_i, v_j}`
//! (`i < j`) and for separator blocks `1..=n+m`:
//!
//! ```text
//! S(v_i)     = w_i x^i_{i,j} x^i_{i,h} x^i_{i,z} w_i
//! S(e_{i,j}) = e^1_{i,j} x^i_{i,j} e^2_{i,j} e^1_{i,j} x^j_{i,j} e^2_{i,j}
//! Sep_b      = sep_{b,1} sep_{b,2} sep_{b,3}
//! S          = S(v_1) Sep_1 … S(v_n) Sep_n S(e_1) Sep_{n+1} … S(e_m) Sep_{n+m}
//! ```
//!
//! Edges appear in lexicographic order. A graph with an independent set of
//! size `q` yields a run subsequence of length `5q + 4(n-q) + 3m + 3(n+m)`
//! and conversely.

use std::fmt::{self, Write as _};

use super::graph::CubicGraph;
use super::ReductionError;
use crate::instance::{Instance, SymbolId};
use crate::solution::Solution;

/// What a symbol of the encoding stands for. Vertices are 1-based, edges are
/// given by their endpoints `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Vertex {
        i: usize,
    },
    /// `x^owner_{i,j}`: edge `{i, j}` seen from endpoint `owner`.
    Incidence {
        i: usize,
        j: usize,
        owner: usize,
    },
    EdgeSymbol {
        i: usize,
        j: usize,
        part: u8,
    },
    Separator {
        block: usize,
        z: u8,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockId {
    Vertex(usize),
    Edge(usize, usize),
    Separator(usize),
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockId::Vertex(i) => write!(f, "V{i}"),
            BlockId::Edge(i, j) => write!(f, "E{i},{j}"),
            BlockId::Separator(b) => write!(f, "SEP{b}"),
        }
    }
}

/// A block of the encoding occupying positions `start..=end` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub block: BlockId,
    pub start: usize,
    pub end: usize,
}

// Offsets inside S(v) and S(e).
const VERTEX_WW: [usize; 2] = [0, 4];
const VERTEX_LEFT: [usize; 4] = [0, 1, 2, 3];
const VERTEX_RIGHT: [usize; 4] = [1, 2, 3, 4];
const EDGE_LOW_X: [usize; 4] = [0, 1, 2, 5];
const EDGE_HIGH_X: [usize; 4] = [0, 3, 4, 5];
const EDGE_E1E1: [usize; 3] = [0, 3, 5];
const EDGE_E2E2: [usize; 3] = [0, 2, 5];

/// The encoded string together with the bookkeeping needed to decode it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMap {
    graph: CubicGraph,
    instance: Instance,
    roles: Vec<Role>,
    spans: Vec<Span>,
}

fn vertex_token(i: usize) -> String {
    format!("w_{i}")
}

fn incidence_token(i: usize, j: usize, owner: usize) -> String {
    format!("x_{i},{j}^{owner}")
}

fn edge_token(i: usize, j: usize, part: u8) -> String {
    format!("e_{i},{j}^{part}")
}

fn separator_token(block: usize, z: u8) -> String {
    format!("sep_{block},{z}")
}

fn push_separator(tokens: &mut Vec<(String, Role)>, spans: &mut Vec<Span>, block: usize) {
    let start = tokens.len() + 1;
    for z in 1..=3 {
        tokens.push((separator_token(block, z), Role::Separator { block, z }));
    }
    spans.push(Span {
        block: BlockId::Separator(block),
        start,
        end: start + 2,
    });
}

pub fn misc_encode(graph: &CubicGraph) -> ReductionMap {
    let n = graph.n();
    let mut tokens: Vec<(String, Role)> = Vec::new();
    let mut spans = Vec::new();

    for v in 1..=n {
        let start = tokens.len() + 1;
        tokens.push((vertex_token(v), Role::Vertex { i: v }));
        for u in graph.neighbors(v) {
            let (i, j) = (v.min(u), v.max(u));
            tokens.push((incidence_token(i, j, v), Role::Incidence { i, j, owner: v }));
        }
        tokens.push((vertex_token(v), Role::Vertex { i: v }));
        spans.push(Span {
            block: BlockId::Vertex(v),
            start,
            end: start + 4,
        });
        push_separator(&mut tokens, &mut spans, v);
    }
    for (idx, &(i, j)) in graph.edges().iter().enumerate() {
        let start = tokens.len() + 1;
        for (owner, part) in [
            (None, 1),
            (Some(i), 0),
            (None, 2),
            (None, 1),
            (Some(j), 0),
            (None, 2),
        ] {
            tokens.push(match owner {
                Some(o) => (incidence_token(i, j, o), Role::Incidence { i, j, owner: o }),
                None => (edge_token(i, j, part), Role::EdgeSymbol { i, j, part }),
            });
        }
        spans.push(Span {
            block: BlockId::Edge(i, j),
            start,
            end: start + 5,
        });
        push_separator(&mut tokens, &mut spans, n + idx + 1);
    }

    let instance = Instance::from_tokens(tokens.iter().map(|t| t.0.as_str()))
        .expect("encoding tokens are well formed");
    let mut roles = vec![Role::Vertex { i: 0 }; instance.alphabet_size()];
    for (pos, (_, role)) in tokens.iter().enumerate() {
        roles[instance.at(pos + 1)] = *role;
    }
    ReductionMap {
        graph: graph.clone(),
        instance,
        roles,
        spans,
    }
}

impl ReductionMap {
    pub fn graph(&self) -> &CubicGraph {
        &self.graph
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn role(&self, id: SymbolId) -> Role {
        self.roles[id]
    }

    /// Blocks in string order.
    pub fn spans(&self) -> &[Span] {
        &self.spans
    }

    /// `5q + 4(n-q) + 3m + 3(n+m)`: the optimum when the maximum independent set has size `q`.
    pub fn threshold(&self, q: usize) -> usize {
        let (n, m) = (self.graph.n(), self.graph.m());
        5 * q + 4 * (n - q) + 3 * m + 3 * (n + m)
    }

    fn vertex_start(&self, v: usize) -> usize {
        self.spans[2 * (v - 1)].start
    }

    fn edge_start(&self, e: usize) -> usize {
        self.spans[2 * (self.graph.n() + e)].start
    }

    fn separator_start(&self, b: usize) -> usize {
        self.spans[2 * b - 1].start
    }

    /// The sidecar role file: one line `<token> <role> <block-id>` per symbol.
    /// Incidence symbols live in two blocks, written `V<owner>|E<i>,<j>`.
    pub fn role_table(&self) -> String {
        let mut out = String::new();
        for (id, role) in self.roles.iter().enumerate() {
            let token = self.instance.token(id);
            let (name, block) = match *role {
                Role::Vertex { i } => ("vertex".to_string(), BlockId::Vertex(i).to_string()),
                Role::Incidence { i, j, owner } => (
                    "incidence".to_string(),
                    format!("{}|{}", BlockId::Vertex(owner), BlockId::Edge(i, j)),
                ),
                Role::EdgeSymbol { i, j, part } => {
                    (format!("edge{part}"), BlockId::Edge(i, j).to_string())
                }
                Role::Separator { block, .. } => (
                    "separator".to_string(),
                    BlockId::Separator(block).to_string(),
                ),
            };
            writeln!(out, "{token} {name} {block}").unwrap();
        }
        out
    }
}

/// The canonical run subsequence of the independent set `set` (1-based vertices).
pub fn misc_solution_from_is(
    map: &ReductionMap,
    set: &[usize],
) -> Result<Solution, ReductionError> {
    let g = map.graph();
    let mut inside = vec![false; g.n() + 1];
    for &v in set {
        if v == 0 || v > g.n() {
            return Err(ReductionError::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        inside[v] = true;
    }
    if let Some(&(i, j)) = g.edges().iter().find(|&&(i, j)| inside[i] && inside[j]) {
        return Err(ReductionError::NotIndependent { i, j });
    }
    Ok(solution_for(map, &inside))
}

fn solution_for(map: &ReductionMap, inside: &[bool]) -> Solution {
    let g = map.graph();
    let mut idx = Vec::with_capacity(map.instance.len());
    let mut put = |start: usize, offsets: &[usize]| idx.extend(offsets.iter().map(|o| start + o));
    for v in 1..=g.n() {
        put(
            map.vertex_start(v),
            if inside[v] { &VERTEX_WW } else { &VERTEX_LEFT },
        );
        put(map.separator_start(v), &[0, 1, 2]);
    }
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        let form: &[usize] = if inside[i] {
            &EDGE_LOW_X
        } else if inside[j] {
            &EDGE_HIGH_X
        } else {
            &EDGE_E1E1
        };
        put(map.edge_start(e), form);
        put(map.separator_start(g.n() + e + 1), &[0, 1, 2]);
    }
    Solution::validate(&map.instance, &idx)
        .expect("canonical forms of an independent set are compatible")
}

fn selected_in(mask: &[bool], start: usize, len: usize) -> Vec<usize> {
    (0..len).filter(|o| mask[start + o]).collect()
}

/// Rewrites `sol` into canonical form without shortening it.
///
/// Separators are restored first: a separator block with nothing selected
/// can only be bridged by a run of length two, which is dropped in favour of
/// the three separator symbols. Afterwards a vertex block holding at most two
/// positions becomes `w w` and every other vertex block takes its left
/// length-4 form. While some edge has both endpoints in `w w` form, its lower
/// endpoint is switched to the length-4 form. Edge blocks finally take the
/// longest form compatible with their endpoints.
pub fn canonicalize(map: &ReductionMap, sol: &Solution) -> Result<Solution, ReductionError> {
    let inst = &map.instance;
    Solution::validate(inst, sol.indices()).map_err(ReductionError::InvalidSolution)?;
    let n = inst.len();
    let mut mask = vec![false; n + 2];
    for &i in sol.indices() {
        mask[i] = true;
    }
    let g = map.graph();

    for b in 1..=g.n() + g.m() {
        let start = map.separator_start(b);
        if selected_in(&mask, start, 3).is_empty() {
            let before = (1..start).rev().find(|&p| mask[p]);
            let after = (start + 3..=n).find(|&p| mask[p]);
            if let (Some(u), Some(v)) = (before, after) {
                if inst.at(u) == inst.at(v) {
                    mask[u] = false;
                    mask[v] = false;
                }
            }
        }
        for o in 0..3 {
            mask[start + o] = true;
        }
    }

    let mut inside = vec![false; g.n() + 1];
    for v in 1..=g.n() {
        inside[v] = selected_in(&mask, map.vertex_start(v), 5).len() <= 2;
    }
    for &(i, j) in g.edges() {
        if inside[i] && inside[j] {
            inside[i] = false;
        }
    }
    Ok(solution_for(map, &inside))
}

/// Whether `sol` has the canonical shape: all separators, every vertex block
/// `w w` or a length-4 form, no edge with both endpoints `w w`, and edge
/// blocks of length 4 exactly when an endpoint is `w w`.
pub fn is_canonical(map: &ReductionMap, sol: &Solution) -> bool {
    let inst = &map.instance;
    if Solution::validate(inst, sol.indices()).is_err() {
        return false;
    }
    let mut mask = vec![false; inst.len() + 2];
    for &i in sol.indices() {
        mask[i] = true;
    }
    let g = map.graph();
    if (1..=g.n() + g.m()).any(|b| selected_in(&mask, map.separator_start(b), 3).len() != 3) {
        return false;
    }
    let mut short = vec![false; g.n() + 1];
    for v in 1..=g.n() {
        let sel = selected_in(&mask, map.vertex_start(v), 5);
        short[v] = sel == VERTEX_WW;
        if !(short[v] || sel == VERTEX_LEFT || sel == VERTEX_RIGHT) {
            return false;
        }
    }
    g.edges().iter().enumerate().all(|(e, &(i, j))| {
        let sel = selected_in(&mask, map.edge_start(e), 6);
        match (short[i], short[j]) {
            (true, true) => false,
            (false, false) => sel == EDGE_E1E1 || sel == EDGE_E2E2,
            _ => sel == EDGE_LOW_X || sel == EDGE_HIGH_X,
        }
    })
}

/// The independent set read off the canonical form of `sol`: the vertices
/// whose block is `w w`.
pub fn misc_decode(map: &ReductionMap, sol: &Solution) -> Result<Vec<usize>, ReductionError> {
    let canon = canonicalize(map, sol)?;
    let mut mask = vec![false; map.instance.len() + 2];
    for &i in canon.indices() {
        mask[i] = true;
    }
    Ok((1..=map.graph().n())
        .filter(|&v| selected_in(&mask, map.vertex_start(v), 5) == VERTEX_WW)
        .collect())
}
