//! Reference lists of sequences, one block per alphabet size.
//!
//! Format: one compact sequence per line, blocks separated by blank lines,
//! lines starting with `#` ignored. Every sequence in a block must have the
//! same number of distinct letters, which keys the block.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::seq::{parse_sequence, Sequence};

/// The shipped list of reduced sequences on at most 6 letters with formation
/// width 4 and alternation length 5.
pub const APPENDIX_B: &str = include_str!("../data/appendix_b.txt");

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GoldenBlocks {
    blocks: BTreeMap<usize, BTreeSet<Sequence>>,
}

impl GoldenBlocks {
    pub fn parse(text: &str) -> Result<Self> {
        let mut blocks: BTreeMap<usize, BTreeSet<Sequence>> = BTreeMap::new();
        let mut current: Vec<(usize, Sequence)> = Vec::new();
        let mut flush = |current: &mut Vec<(usize, Sequence)>| -> Result<()> {
            let Some((first_line, first)) = current.first() else {
                return Ok(());
            };
            let n = first.distinct();
            if blocks.contains_key(&n) {
                return Err(Error::Golden {
                    line: *first_line,
                    reason: format!("second block for n = {n}"),
                });
            }
            let mut set = BTreeSet::new();
            for (line, s) in current.drain(..) {
                if s.distinct() != n {
                    return Err(Error::Golden {
                        line,
                        reason: format!("{s} has {} letters, block has {n}", s.distinct()),
                    });
                }
                if !set.insert(s.clone()) {
                    return Err(Error::Golden {
                        line,
                        reason: format!("duplicate {s}"),
                    });
                }
            }
            blocks.insert(n, set);
            Ok(())
        };
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.starts_with('#') {
                continue;
            }
            if line.is_empty() {
                flush(&mut current)?;
                continue;
            }
            let s = parse_sequence(line).map_err(|e| Error::Golden {
                line: idx + 1,
                reason: e.to_string(),
            })?;
            current.push((idx + 1, s));
        }
        flush(&mut current)?;
        Ok(Self { blocks })
    }

    pub fn appendix_b() -> Self {
        Self::parse(APPENDIX_B).expect("shipped golden file parses")
    }

    pub fn block(&self, n: usize) -> Option<&BTreeSet<Sequence>> {
        self.blocks.get(&n)
    }

    pub fn sizes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.blocks.iter().map(|(&n, b)| (n, b.len()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Sequence> {
        self.blocks.values().flatten()
    }
}
