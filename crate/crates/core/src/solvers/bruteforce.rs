use super::SolverError;
use crate::instance::Instance;
use crate::solution::Solution;

pub const BRUTEFORCE_MAX_LEN: usize = 18;

struct Search<'a> {
    symbols: &'a [usize],
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    // `used` holds every symbol that already has a run; `last` is the open run.
    fn dfs(&mut self, pos: usize, last: Option<usize>, used: u64) {
        let remaining = self.symbols.len() - pos;
        if self.chosen.len() + remaining <= self.best.len() {
            return;
        }
        if remaining == 0 {
            self.best.clone_from(&self.chosen);
            return;
        }
        let s = self.symbols[pos];
        if last == Some(s) || used & (1 << s) == 0 {
            self.chosen.push(pos + 1);
            self.dfs(pos + 1, Some(s), used | (1 << s));
            self.chosen.pop();
        }
        self.dfs(pos + 1, last, used);
    }
}

/// Exhaustive search for a longest run subsequence. Only for `|S| <= 18`.
pub fn solve_bruteforce(instance: &Instance) -> Result<Solution, SolverError> {
    if instance.len() > BRUTEFORCE_MAX_LEN {
        return Err(SolverError::InstanceTooLarge {
            len: instance.len(),
            cap: BRUTEFORCE_MAX_LEN,
        });
    }
    let mut search = Search {
        symbols: instance.symbols(),
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.dfs(0, None, 0);
    Ok(Solution::validate(instance, &search.best).expect("search only emits run subsequences"))
}
