//! Exact values of `Ex(u, n)` for tiny `n` by exhaustive search.
//!
//! `Ex(u, n)` is the maximum length of an `r`-sparse sequence on at most `n`
//! letters that avoids `u`, where `r` is the number of distinct letters of
//! `u`. The search grows sequences left to right:
//!
//! - only canonical prefixes are explored (avoidance and sparsity do not
//!   depend on letter names);
//! - a new letter must differ from the previous `r - 1` letters;
//! - containment is tracked incrementally as the set of partial injections of
//!   `u` matched so far, keeping for each partial map only the longest
//!   matched prefix of `u`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::seq::Sequence;

/// Default node budget for [`ex_bruteforce`].
pub const DEFAULT_EX_BUDGET: u64 = 100_000_000;

/// Largest alphabet the search supports.
pub const MAX_EX_LETTERS: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub pattern: Sequence,
    pub n: usize,
    /// `Ex(u, n)` when `cap_hit` is false; otherwise only a lower bound.
    pub value: usize,
    /// A longest sequence found.
    pub witness: Sequence,
    /// Search-tree nodes visited.
    pub nodes: u64,
    /// The node budget ran out before the search finished.
    pub cap_hit: bool,
}

impl ExtremalResult {
    pub fn exact(&self) -> Option<usize> {
        (!self.cap_hit).then_some(self.value)
    }
}

/// The pigeonhole bound `C(n, r) * l * r`, or `n` when `n < r`.
pub fn pigeonhole_cap(u: &Sequence, n: usize) -> u128 {
    let r = u.distinct();
    let mut binom: u128 = 1;
    for k in 0..r as u128 {
        if k >= n as u128 {
            binom = 0;
            break;
        }
        binom = binom * (n as u128 - k) / (k + 1);
    }
    (binom * u.len() as u128 * r as u128).max(n as u128)
}

/// Partial injections of the pattern into the letters seen so far.
///
/// A map packs one 4-bit host letter per pattern letter (0 = unassigned).
#[derive(Debug, Clone)]
struct Tracker<'a> {
    word: &'a [usize],
    states: HashMap<u64, usize>,
}

impl<'a> Tracker<'a> {
    fn new(word: &'a [usize]) -> Self {
        Self {
            word,
            states: HashMap::from([(0, 0)]),
        }
    }

    /// The tracker after appending `c`, or `None` if the pattern is now
    /// contained.
    fn push(&self, c: u32) -> Option<Self> {
        let mut states = self.states.clone();
        for (&map, &k) in &self.states {
            let a = self.word[k];
            let image = (map >> (4 * a)) & 0xf;
            let advanced = if image == u64::from(c) {
                map
            } else if image == 0 && !uses(map, c) {
                map | (u64::from(c) << (4 * a))
            } else {
                continue;
            };
            if k + 1 == self.word.len() {
                return None;
            }
            let entry = states.entry(advanced).or_insert(0);
            *entry = (*entry).max(k + 1);
        }
        Some(Self {
            word: self.word,
            states,
        })
    }
}

fn uses(map: u64, c: u32) -> bool {
    (0..16).any(|slot| (map >> (4 * slot)) & 0xf == u64::from(c))
}

fn dense(u: &Sequence) -> Vec<usize> {
    let canon = u.canonicalize();
    canon.letters().iter().map(|&c| c as usize - 1).collect()
}

struct Search<'a> {
    n: u32,
    r: usize,
    cap: usize,
    budget: u64,
    nodes: u64,
    cap_hit: bool,
    best: Vec<u32>,
    rescan: Option<&'a Sequence>,
}

impl Search<'_> {
    fn run(&mut self, prefix: &mut Vec<u32>, max_letter: u32, tracker: &Tracker) {
        if self.cap_hit {
            return;
        }
        if self.nodes == self.budget {
            self.cap_hit = true;
            return;
        }
        self.nodes += 1;
        if prefix.len() > self.best.len() {
            self.best.clone_from(prefix);
        }
        if prefix.len() >= self.cap {
            return;
        }
        let window = prefix.len().saturating_sub(self.r.saturating_sub(1));
        for c in 1..=(max_letter + 1).min(self.n) {
            if prefix[window..].contains(&c) {
                continue;
            }
            let next = tracker.push(c);
            prefix.push(c);
            if let Some(u) = self.rescan {
                let contained =
                    Sequence::from_letters_unchecked(prefix.clone()).contains_pattern(u);
                assert_eq!(contained, next.is_none(), "tracker disagrees on {prefix:?}");
            }
            if let Some(next) = next {
                self.run(prefix, max_letter.max(c), &next);
            }
            prefix.pop();
        }
    }
}

/// Exact `Ex(u, n)` by depth-first search, visiting at most `budget` nodes.
///
/// When the budget runs out, `cap_hit` is set and `value` is only the longest
/// avoiding sequence found so far.
pub fn ex_bruteforce(u: &Sequence, n: usize, budget: u64) -> Result<ExtremalResult> {
    search(u, n, budget, false)
}

fn search(u: &Sequence, n: usize, budget: u64, rescan: bool) -> Result<ExtremalResult> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if n == 0 || n > MAX_EX_LETTERS {
        return Err(Error::InvalidArgument(format!(
            "alphabet size must be in 1..={MAX_EX_LETTERS}"
        )));
    }
    if u.distinct() > 16 {
        return Err(Error::InvalidArgument(
            "pattern has more than 16 letters".into(),
        ));
    }
    let word = dense(u);
    let cap = usize::try_from(pigeonhole_cap(u, n)).unwrap_or(usize::MAX);
    let mut state = Search {
        n: n as u32,
        r: u.distinct(),
        cap,
        budget,
        nodes: 0,
        cap_hit: false,
        best: Vec::new(),
        rescan: rescan.then_some(u),
    };
    // The empty sequence contains only the empty pattern, excluded above.
    state.run(&mut Vec::new(), 0, &Tracker::new(&word));
    let witness = Sequence::from_letters_unchecked(state.best);
    Ok(ExtremalResult {
        pattern: u.clone(),
        n,
        value: witness.len(),
        witness,
        nodes: state.nodes,
        cap_hit: state.cap_hit,
    })
}
