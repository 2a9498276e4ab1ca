//! String instances: parsing, alphabet normalization and run decomposition.
//!
//! Symbols are compacted to ids `0..alphabet_size` in order of first
//! appearance. Positions exposed by the public API are 1-based.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Compact symbol identifier, assigned by first appearance.
pub type SymbolId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("instance contains no symbols")]
    EmptyInstance,
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid token {token:?}: {reason}")]
    InvalidToken { token: String, reason: &'static str },
    #[error("symbol id {id} is outside the alphabet of size {alphabet_size}")]
    SymbolOutOfRange { id: usize, alphabet_size: usize },
    #[error("symbol id {id} never occurs in the string")]
    UnusedSymbol { id: usize },
    #[error("token table is not a bijection: {token:?} appears twice")]
    DuplicateToken { token: String },
}

/// A string `S` over a compact alphabet, with an optional target length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    symbols: Vec<SymbolId>,
    tokens: Vec<String>,
    k: Option<usize>,
}

fn check_token(token: &str) -> Result<(), InstanceError> {
    let bad = |reason| {
        Err(InstanceError::InvalidToken {
            token: token.to_string(),
            reason,
        })
    };
    if token.is_empty() {
        return bad("empty token");
    }
    if token.chars().any(char::is_whitespace) {
        return bad("contains whitespace");
    }
    if token.chars().any(char::is_control) {
        return bad("contains a control character");
    }
    if token.contains("//") {
        return bad("contains the comment marker");
    }
    Ok(())
}

impl Instance {
    /// Builds an instance from a token sequence, assigning ids by first appearance.
    pub fn from_tokens<I, S>(tokens: I) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut ids: HashMap<String, SymbolId> = HashMap::new();
        let mut table = Vec::new();
        let mut symbols = Vec::new();
        for tok in tokens {
            let tok = tok.as_ref();
            check_token(tok)?;
            let next = table.len();
            let id = *ids.entry(tok.to_string()).or_insert_with(|| {
                table.push(tok.to_string());
                next
            });
            symbols.push(id);
        }
        if symbols.is_empty() {
            return Err(InstanceError::EmptyInstance);
        }
        Ok(Instance {
            symbols,
            tokens: table,
            k: None,
        })
    }

    /// Builds an instance from raw ids and a token table, checking every invariant.
    pub fn from_ids(symbols: Vec<SymbolId>, tokens: Vec<String>) -> Result<Self, InstanceError> {
        if symbols.is_empty() {
            return Err(InstanceError::EmptyInstance);
        }
        let mut seen = vec![false; tokens.len()];
        for &id in &symbols {
            if id >= tokens.len() {
                return Err(InstanceError::SymbolOutOfRange {
                    id,
                    alphabet_size: tokens.len(),
                });
            }
            seen[id] = true;
        }
        if let Some(id) = seen.iter().position(|s| !s) {
            return Err(InstanceError::UnusedSymbol { id });
        }
        let mut distinct = HashMap::new();
        for t in &tokens {
            check_token(t)?;
            if distinct.insert(t.as_str(), ()).is_some() {
                return Err(InstanceError::DuplicateToken { token: t.clone() });
            }
        }
        Ok(Instance {
            symbols,
            tokens,
            k: None,
        })
    }

    /// Parses the plain-text instance format.
    ///
    /// Lines whose first non-blank characters are `//` are comments; every
    /// other line contributes whitespace-separated tokens, read left to right.
    /// A `//` inside a token line is rejected rather than treated as a
    /// trailing comment.
    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let mut tokens = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim_start().starts_with("//") {
                continue;
            }
            for tok in line.split_whitespace() {
                check_token(tok).map_err(|e| InstanceError::Parse {
                    line: lineno + 1,
                    reason: e.to_string(),
                })?;
                tokens.push(tok);
            }
        }
        Self::from_tokens(tokens)
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    /// `|S|`.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// `|Σ|`.
    pub fn alphabet_size(&self) -> usize {
        self.tokens.len()
    }

    /// The symbol ids, 0-based storage (`symbols()[i - 1]` is `S[i]`).
    pub fn symbols(&self) -> &[SymbolId] {
        &self.symbols
    }

    /// `S[pos]` for a 1-based position.
    pub fn at(&self, pos: usize) -> SymbolId {
        self.symbols[pos - 1]
    }

    pub fn token(&self, id: SymbolId) -> &str {
        &self.tokens[id]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn id_of(&self, token: &str) -> Option<SymbolId> {
        self.tokens.iter().position(|t| t == token)
    }

    /// Occurrence count of every symbol.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet_size()];
        for &s in &self.symbols {
            counts[s] += 1;
        }
        counts
    }

    /// `occ`: the maximum number of occurrences of any symbol.
    pub fn max_occurrence(&self) -> usize {
        self.occurrence_counts().into_iter().max().unwrap_or(0)
    }

    /// Maximal runs of `S`, left to right.
    pub fn run_decompose(&self) -> Vec<Block> {
        let mut blocks: Vec<Block> = Vec::new();
        for (i, &s) in self.symbols.iter().enumerate() {
            match blocks.last_mut() {
                Some(b) if b.symbol == s => b.len += 1,
                _ => blocks.push(Block {
                    symbol: s,
                    start: i + 1,
                    len: 1,
                }),
            }
        }
        blocks
    }

    /// Serializes to the instance file format (single token line).
    pub fn to_text(&self) -> String {
        let mut out = self
            .symbols
            .iter()
            .map(|&s| self.tokens[s].as_str())
            .collect::<Vec<_>>()
            .join(" ");
        out.push('\n');
        out
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_text().trim_end())
    }
}

/// A maximal block of equal symbols in `S`, starting at a 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub symbol: SymbolId,
    pub start: usize,
    pub len: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_worked_example() {
        let inst = Instance::parse("a b a c a a b b a b").unwrap();
        assert_eq!(inst.len(), 10);
        assert_eq!(inst.alphabet_size(), 3);
        assert_eq!(inst.id_of("a"), Some(0));
        assert_eq!(inst.id_of("b"), Some(1));
        assert_eq!(inst.id_of("c"), Some(2));
    }

    #[test]
    fn parses_single_symbol_and_contig_labels() {
        let inst = Instance::parse("x").unwrap();
        assert_eq!((inst.len(), inst.alphabet_size()), (1, 1));
        let fig = Instance::parse("y1 y1 y2 y1 y4 y2 y4 y3 y3").unwrap();
        assert_eq!((fig.len(), fig.alphabet_size()), (9, 4));
        assert_eq!(fig.id_of("y4"), Some(2));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "// header\n  // indented comment\na b\n\n c\n";
        let inst = Instance::parse(text).unwrap();
        assert_eq!(inst.to_text(), "a b c\n");
    }

    #[test]
    fn empty_streams_are_rejected() {
        assert_eq!(Instance::parse(""), Err(InstanceError::EmptyInstance));
        assert_eq!(
            Instance::parse("// only a comment\n   \n"),
            Err(InstanceError::EmptyInstance)
        );
    }

    #[test]
    fn inline_comment_reports_line() {
        match Instance::parse("a b\nc // trailing\n") {
            Err(InstanceError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match Instance::parse("a\u{7}b") {
            Err(InstanceError::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn from_ids_checks_invariants() {
        let t = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert!(Instance::from_ids(vec![0, 1, 0], t(&["a", "b"])).is_ok());
        assert!(matches!(
            Instance::from_ids(vec![0, 2], t(&["a", "b"])),
            Err(InstanceError::SymbolOutOfRange { id: 2, .. })
        ));
        assert!(matches!(
            Instance::from_ids(vec![0, 0], t(&["a", "b"])),
            Err(InstanceError::UnusedSymbol { id: 1 })
        ));
        assert!(matches!(
            Instance::from_ids(vec![0, 1], t(&["a", "a"])),
            Err(InstanceError::DuplicateToken { .. })
        ));
    }

    #[test]
    fn run_decomposition() {
        let inst = Instance::parse("a a b").unwrap();
        let runs: Vec<_> = inst
            .run_decompose()
            .iter()
            .map(|b| (b.symbol, b.len))
            .collect();
        assert_eq!(runs, vec![(0, 2), (1, 1)]);

        let inst = Instance::parse("a").unwrap();
        assert_eq!(inst.run_decompose().len(), 1);

        let inst = Instance::parse("a b a c a a b b a b").unwrap();
        let runs: Vec<_> = inst
            .run_decompose()
            .iter()
            .map(|b| (b.symbol, b.len))
            .collect();
        assert_eq!(
            runs,
            vec![
                (0, 1),
                (1, 1),
                (0, 1),
                (2, 1),
                (0, 2),
                (1, 2),
                (0, 1),
                (1, 1)
            ]
        );
    }

    #[test]
    fn occurrence_statistics() {
        let inst = Instance::parse("a b a c a a b b a b").unwrap();
        assert_eq!(inst.occurrence_counts(), vec![5, 4, 1]);
        assert_eq!(inst.max_occurrence(), 5);
    }
}
