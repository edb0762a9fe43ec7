//! Sequences over positive-integer letters and the structural measurements
//! used throughout the crate.
//!
//! Letters are 1-based. A sequence is *canonical* when its letters, read in
//! order of first occurrence, are exactly `1, 2, ..., r`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pattern;

/// A finite word over positive-integer letters.
///
/// Values are immutable after construction; all transformations return new
/// sequences.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    letters: Vec<u32>,
}

impl Sequence {
    /// Builds a sequence, rejecting the letter 0.
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Self { letters })
    }

    /// Builds a sequence from letters already known to be positive.
    pub(crate) fn from_letters_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(!letters.contains(&0));
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of distinct letters.
    pub fn distinct(&self) -> usize {
        let mut seen: Vec<u32> = self.letters.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Renames letters so that first occurrences read `1, 2, ..., r`.
    pub fn canonicalize(&self) -> Sequence {
        let mut names: Vec<(u32, u32)> = Vec::new();
        let letters = self
            .letters
            .iter()
            .map(|&c| match names.iter().find(|(from, _)| *from == c) {
                Some(&(_, to)) => to,
                None => {
                    let to = names.len() as u32 + 1;
                    names.push((c, to));
                    to
                }
            })
            .collect();
        Sequence { letters }
    }

    pub fn is_canonical(&self) -> bool {
        let mut next = 1;
        for &c in &self.letters {
            if c == next {
                next += 1;
            } else if c > next {
                return false;
            }
        }
        true
    }

    /// Positions in reverse order. The result is not canonicalized.
    pub fn reversed(&self) -> Sequence {
        Sequence {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Deletes every letter occurring exactly once and canonicalizes.
    pub fn reduced(&self) -> Sequence {
        let profile = self.occurrence_profile();
        let letters = self
            .letters
            .iter()
            .copied()
            .filter(|c| profile.count(*c) >= 2)
            .collect();
        Sequence { letters }.canonicalize()
    }

    pub fn occurrence_profile(&self) -> OccurrenceProfile {
        let mut counts = BTreeMap::new();
        for &c in &self.letters {
            *counts.entry(c).or_insert(0) += 1;
        }
        OccurrenceProfile { counts }
    }

    /// Longest two-letter alternation `x y x y ...` contained in the sequence.
    ///
    /// Conventions for degenerate inputs: 0 for the empty sequence and 1 when
    /// only one distinct letter is present.
    pub fn alternation_length(&self) -> usize {
        if self.letters.is_empty() {
            return 0;
        }
        let alphabet: Vec<u32> = self.occurrence_profile().counts.into_keys().collect();
        let mut best = 1;
        for (i, &x) in alphabet.iter().enumerate() {
            for &y in &alphabet[i + 1..] {
                // The longest alternation over {x, y} is the number of runs
                // of the word restricted to those two letters.
                let mut runs = 0;
                let mut last = 0;
                for &c in &self.letters {
                    if (c == x || c == y) && c != last {
                        runs += 1;
                        last = c;
                    }
                }
                best = best.max(runs);
            }
        }
        best
    }

    /// Whether any `r` consecutive letters are pairwise different.
    ///
    /// Sequences shorter than `r` must be pairwise different as a whole, so
    /// every prefix of an `r`-sparse sequence is `r`-sparse.
    pub fn is_r_sparse(&self, r: usize) -> Result<bool> {
        if r == 0 {
            return Err(Error::InvalidArgument(
                "sparsity window must be at least 1".into(),
            ));
        }
        let s = &self.letters;
        for i in 0..s.len() {
            let end = (i + r).min(s.len());
            if s[i + 1..end].contains(&s[i]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `needle` occurs in `self` as a subsequence, letter for letter.
    pub fn has_subsequence(&self, needle: &Sequence) -> bool {
        pattern::is_subsequence(&self.letters, &needle.letters)
    }

    /// Whether some subsequence of `self` is isomorphic to `u`.
    pub fn contains_pattern(&self, u: &Sequence) -> bool {
        pattern::contains_pattern(self, u)
    }

    /// Whether every letter is at most 9, so the compact form is unambiguous.
    fn fits_compact(&self) -> bool {
        self.letters.iter().all(|&c| c <= 9)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fits_compact() {
            for c in &self.letters {
                write!(f, "{c}")?;
            }
        } else {
            for (i, c) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c}")?;
            }
            // "10" alone would read back as the compact word 1 0.
            if self.letters.len() == 1 {
                f.write_str(" ")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sequence({self})")
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

impl Serialize for Sequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses the sequence text format.
///
/// Text containing whitespace is read as whitespace-separated positive
/// integers; otherwise every character is one letter `1..=9`. Letters are kept
/// exactly as written.
pub fn parse_sequence(text: &str) -> Result<Sequence> {
    let letters = if text.contains(char::is_whitespace) {
        text.split_whitespace()
            .enumerate()
            .map(|(index, token)| parse_letter(index, token))
            .collect::<Result<Vec<_>>>()?
    } else {
        text.chars()
            .enumerate()
            .map(|(index, ch)| parse_letter(index, ch.encode_utf8(&mut [0; 4])))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(Sequence { letters })
}

fn parse_letter(index: usize, token: &str) -> Result<u32> {
    let value: i64 = token.parse().map_err(|_| Error::InvalidToken {
        index,
        token: token.to_string(),
    })?;
    if value <= 0 || value > u32::MAX as i64 {
        return Err(Error::NonPositiveLetter {
            index,
            token: token.to_string(),
        });
    }
    Ok(value as u32)
}

/// Letter counts of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OccurrenceProfile {
    counts: BTreeMap<u32, usize>,
}

impl OccurrenceProfile {
    pub fn counts(&self) -> &BTreeMap<u32, usize> {
        &self.counts
    }

    pub fn count(&self, letter: u32) -> usize {
        self.counts.get(&letter).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Every letter occurs at least twice (vacuously true when empty).
    pub fn is_reduced(&self) -> bool {
        self.counts.values().all(|&c| c >= 2)
    }

    /// Exactly one letter occurs three times and every other letter twice.
    pub fn is_shape_3_2(&self) -> bool {
        self.counts.values().filter(|&&c| c == 3).count() == 1
            && self.counts.values().all(|&c| c == 2 || c == 3)
    }

    /// The letter occurring three times, for shape-3-2 profiles.
    pub fn tripled_letter(&self) -> Option<u32> {
        if !self.is_shape_3_2() {
            return None;
        }
        self.counts.iter().find(|(_, &c)| c == 3).map(|(&l, _)| l)
    }
}
