//! Run subsequences: validation, structure and the text output format.

use std::fmt::Write as _;

use thiserror::Error;

use crate::instance::{Instance, SymbolId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("indices not strictly increasing at entry {entry} (index {index})")]
    NonIncreasingIndices { entry: usize, index: usize },
    #[error("index {index} outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("symbol {token:?} forms a second run starting at position {position}")]
    RepeatedRunSymbol {
        symbol: SymbolId,
        token: String,
        position: usize,
    },
}

/// One run of a solution: a maximal block of equal selected symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub symbol: SymbolId,
    /// 1-based positions in `S`.
    pub indices: Vec<usize>,
}

impl Run {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// A validated run subsequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    indices: Vec<usize>,
    runs: Vec<Run>,
}

impl Solution {
    /// Checks that `indices` (1-based) select a run subsequence of `instance`.
    pub fn validate(instance: &Instance, indices: &[usize]) -> Result<Self, SolutionError> {
        let n = instance.len();
        let mut runs: Vec<Run> = Vec::new();
        let mut closed = vec![false; instance.alphabet_size()];
        for (entry, &index) in indices.iter().enumerate() {
            if index == 0 || index > n {
                return Err(SolutionError::IndexOutOfRange { index, len: n });
            }
            if entry > 0 && indices[entry - 1] >= index {
                return Err(SolutionError::NonIncreasingIndices { entry, index });
            }
            let s = instance.at(index);
            match runs.last_mut() {
                Some(run) if run.symbol == s => run.indices.push(index),
                last => {
                    if let Some(prev) = last {
                        closed[prev.symbol] = true;
                    }
                    if closed[s] {
                        return Err(SolutionError::RepeatedRunSymbol {
                            symbol: s,
                            token: instance.token(s).to_string(),
                            position: index,
                        });
                    }
                    runs.push(Run {
                        symbol: s,
                        indices: vec![index],
                    });
                }
            }
        }
        Ok(Solution {
            indices: indices.to_vec(),
            runs,
        })
    }

    pub fn empty() -> Self {
        Solution {
            indices: Vec::new(),
            runs: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Number of runs `r`.
    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Renders the three-line output format:
    /// `length L`, `indices i1 i2 ...`, `runs tok:len ...`.
    pub fn render(&self, instance: &Instance) -> String {
        let mut out = format!("length {}\nindices", self.len());
        for i in &self.indices {
            write!(out, " {i}").unwrap();
        }
        out.push_str("\nruns");
        for run in &self.runs {
            write!(out, " {}:{}", instance.token(run.symbol), run.len()).unwrap();
        }
        out.push('\n');
        out
    }
}

/// Parsed form of the solution output format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionOutput {
    pub length: usize,
    pub indices: Vec<usize>,
    pub runs: Vec<(String, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed solution output: {0}")]
pub struct OutputFormatError(pub String);

impl SolutionOutput {
    pub fn parse(text: &str) -> Result<Self, OutputFormatError> {
        let err = |m: &str| OutputFormatError(m.to_string());
        let mut lines = text.lines();
        let mut field = |name: &str| -> Result<Vec<String>, OutputFormatError> {
            let line = lines.next().ok_or_else(|| err("missing line"))?;
            let mut parts = line.split_whitespace();
            if parts.next() != Some(name) {
                return Err(OutputFormatError(format!("expected `{name}` line")));
            }
            Ok(parts.map(str::to_string).collect())
        };
        let length = field("length")?;
        let length = match length.as_slice() {
            [l] => l.parse().map_err(|_| err("bad length"))?,
            _ => return Err(err("bad length")),
        };
        let indices = field("indices")?
            .iter()
            .map(|s| s.parse().map_err(|_| err("bad index")))
            .collect::<Result<Vec<usize>, _>>()?;
        let runs = field("runs")?
            .iter()
            .map(|s| {
                let (tok, len) = s.rsplit_once(':').ok_or_else(|| err("bad run"))?;
                Ok((
                    tok.to_string(),
                    len.parse().map_err(|_| err("bad run length"))?,
                ))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SolutionOutput {
            length,
            indices,
            runs,
        })
    }
}
