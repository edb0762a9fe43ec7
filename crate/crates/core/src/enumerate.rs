//! Canonical generators for the candidate space and the width-4 filter.
//!
//! Candidates are generated directly in canonical form, so every sequence is
//! produced exactly once:
//!
//! - doubled sequences (every letter twice) are grown by inserting both copies
//!   of letter `k` after the first occurrence of letter `k - 1`;
//! - shape-3-2 sequences are obtained from a doubled sequence by inserting a
//!   third copy of some letter after its current last occurrence.
//!
//! Removing the largest letter (respectively the last copy of the tripled
//! letter) inverts each step uniquely, which is why no deduplication is needed.

use log::info;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formation::{fw_search, FwOptions, FwOutcome};
use crate::seq::Sequence;

/// Which generator produced a [`CandidateSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Doubled,
    Alt5Candidates,
    Fw4Alt5,
}

/// A sorted, duplicate-free set of canonical sequences on `n` letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub n: usize,
    pub provenance: Provenance,
    members: Vec<Sequence>,
}

impl CandidateSet {
    fn from_unsorted(n: usize, provenance: Provenance, mut members: Vec<Sequence>) -> Result<Self> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Internal(format!(
                "{provenance:?} generator produced {} twice",
                w[0]
            )));
        }
        Ok(Self {
            n,
            provenance,
            members,
        })
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> &[Sequence] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Sequence> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Sequence) -> bool {
        self.members.binary_search(s).is_ok()
    }
}

/// Calls `visit` with every canonical word of length `2n` in which each
/// letter occurs exactly twice.
pub fn for_each_doubled(n: usize, mut visit: impl FnMut(&[u32])) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "alphabet size must be at least 1".into(),
        ));
    }
    let mut word = Vec::with_capacity(2 * n);
    word.extend([1, 1]);
    grow_doubled(&mut word, 2, n as u32, &mut visit);
    Ok(())
}

fn grow_doubled(word: &mut Vec<u32>, letter: u32, n: u32, visit: &mut impl FnMut(&[u32])) {
    if letter > n {
        visit(word);
        return;
    }
    let after_prev = first_occurrence(word, letter - 1) + 1;
    for i in after_prev..=word.len() {
        word.insert(i, letter);
        for j in i + 1..=word.len() {
            word.insert(j, letter);
            grow_doubled(word, letter + 1, n, visit);
            word.remove(j);
        }
        word.remove(i);
    }
}

fn first_occurrence(word: &[u32], letter: u32) -> usize {
    word.iter()
        .position(|&c| c == letter)
        .expect("letter present")
}

/// All canonical sequences of length `2n` with every letter twice.
pub fn gen_doubled(n: usize) -> Result<CandidateSet> {
    let mut members = Vec::new();
    for_each_doubled(n, |w| {
        members.push(Sequence::from_letters_unchecked(w.to_vec()))
    })?;
    CandidateSet::from_unsorted(n, Provenance::Doubled, members)
}

/// Calls `visit` with every shape-3-2 child of a doubled canonical word that
/// contains a 5-alternation.
pub fn for_each_alt5_child(parent: &[u32], mut visit: impl FnMut(Sequence)) {
    let n = parent.iter().copied().max().unwrap_or(0);
    let mut word = Vec::with_capacity(parent.len() + 1);
    for letter in 1..=n {
        let last = parent
            .iter()
            .rposition(|&c| c == letter)
            .expect("letter present");
        for j in last + 1..=parent.len() {
            word.clear();
            word.extend_from_slice(&parent[..j]);
            word.push(letter);
            word.extend_from_slice(&parent[j..]);
            let candidate = Sequence::from_letters_unchecked(word.clone());
            if candidate.alternation_length() >= 5 {
                visit(candidate);
            }
        }
    }
}

/// All canonical sequences of length `2n + 1` with one letter three times,
/// every other letter twice, containing `ababa`.
pub fn gen_alt5_candidates(n: usize) -> Result<CandidateSet> {
    check_alt5_n(n)?;
    let mut members = Vec::new();
    for_each_doubled(n, |parent| for_each_alt5_child(parent, |c| members.push(c)))?;
    CandidateSet::from_unsorted(n, Provenance::Alt5Candidates, members)
}

fn check_alt5_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "a 5-alternation needs at least 2 letters".into(),
        ));
    }
    Ok(())
}

/// Options for [`enumerate_fw4_alt5`].
#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    /// Filter candidates on the rayon pool.
    pub parallel: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self { parallel: true }
    }
}

/// Whether a candidate has formation width exactly 4 and alternation length 5.
pub fn is_fw4_alt5(u: &Sequence) -> Result<bool> {
    if u.alternation_length() != 5 {
        return Ok(false);
    }
    let report = fw_search(
        u,
        &FwOptions {
            limit: Some(4),
            parallel: false,
        },
    )?;
    Ok(report.outcome == FwOutcome::Exact(4))
}

/// Every reduced canonical sequence on `n` letters with formation width 4 and
/// alternation length 5.
pub fn enumerate_fw4_alt5(n: usize, opts: &EnumOptions) -> Result<CandidateSet> {
    check_alt5_n(n)?;
    let parents = gen_doubled(n)?.into_members();
    info!("n={n}: {} doubled parents", parents.len());

    let survivors_of = |parent: &Sequence| -> Result<Vec<Sequence>> {
        let mut candidates = Vec::new();
        for_each_alt5_child(parent.letters(), |c| candidates.push(c));
        let mut out = Vec::new();
        for c in candidates {
            if is_fw4_alt5(&c)? {
                out.push(c);
            }
        }
        Ok(out)
    };
    let groups: Vec<Vec<Sequence>> = if opts.parallel {
        parents
            .par_iter()
            .map(survivors_of)
            .collect::<Result<_>>()?
    } else {
        parents.iter().map(survivors_of).collect::<Result<_>>()?
    };
    let members: Vec<Sequence> = groups.into_iter().flatten().collect();
    info!(
        "n={n}: {} sequences with fw 4 and alternation length 5",
        members.len()
    );
    CandidateSet::from_unsorted(n, Provenance::Fw4Alt5, members)
}
