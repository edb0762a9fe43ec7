//! Subsequence tests and pattern containment up to injective renaming.
//!
//! Containment is decided by backtracking over partial injections from the
//! pattern's letters to the host's letters. With the partial map fixed, the
//! earliest occurrence of each host letter is always the best choice, so the
//! only branching happens when a pattern letter is seen for the first time.

use crate::seq::Sequence;

/// Whether `needle` occurs in `haystack` as a subsequence with letters
/// matched exactly. The empty needle is a subsequence of everything.
pub fn is_subsequence(haystack: &[u32], needle: &[u32]) -> bool {
    let mut rest = haystack.iter();
    needle.iter().all(|c| rest.any(|h| h == c))
}

/// Whether some subsequence of `s` becomes `u` under a one-to-one renaming.
pub fn contains_pattern(s: &Sequence, u: &Sequence) -> bool {
    Pattern::new(u).is_contained_in(&Host::new(s.letters()))
}

/// A pattern with letters relabelled to dense indices `0..r`.
#[derive(Debug, Clone)]
pub struct Pattern {
    word: Vec<usize>,
    counts: Vec<usize>,
}

impl Pattern {
    pub fn new(u: &Sequence) -> Self {
        let mut names: Vec<u32> = Vec::new();
        let mut counts = Vec::new();
        let word = u
            .letters()
            .iter()
            .map(|&c| {
                let idx = match names.iter().position(|&n| n == c) {
                    Some(i) => i,
                    None => {
                        names.push(c);
                        counts.push(0);
                        names.len() - 1
                    }
                };
                counts[idx] += 1;
                idx
            })
            .collect();
        Self { word, counts }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of distinct letters.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn is_contained_in(&self, host: &Host) -> bool {
        if self.word.len() > host.len || self.counts.len() > host.counts.len() {
            return false;
        }
        let mut image = vec![usize::MAX; self.counts.len()];
        let mut used = vec![false; host.counts.len()];
        self.search(host, 0, 0, &mut image, &mut used)
    }

    fn search(
        &self,
        host: &Host,
        pos: usize,
        k: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == self.word.len() {
            return true;
        }
        if host.len - pos < self.word.len() - k {
            return false;
        }
        let a = self.word[k];
        if image[a] != usize::MAX {
            return match host.next(pos, image[a]) {
                Some(p) => self.search(host, p + 1, k + 1, image, used),
                None => false,
            };
        }
        for h in 0..host.counts.len() {
            if used[h] || host.counts[h] < self.counts[a] {
                continue;
            }
            let Some(p) = host.next(pos, h) else { continue };
            image[a] = h;
            used[h] = true;
            let found = self.search(host, p + 1, k + 1, image, used);
            used[h] = false;
            image[a] = usize::MAX;
            if found {
                return true;
            }
        }
        false
    }
}

/// A host sequence indexed for containment queries: for every position and
/// letter, the next position holding that letter.
#[derive(Debug, Clone)]
pub struct Host {
    len: usize,
    counts: Vec<usize>,
    // next[pos * k + h] = first index >= pos holding letter h, or NONE.
    next: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl Host {
    pub fn new(letters: &[u32]) -> Self {
        let mut names: Vec<u32> = Vec::new();
        let dense: Vec<usize> = letters
            .iter()
            .map(|&c| match names.iter().position(|&n| n == c) {
                Some(i) => i,
                None => {
                    names.push(c);
                    names.len() - 1
                }
            })
            .collect();
        let k = names.len();
        let len = letters.len();
        let mut counts = vec![0; k];
        let mut next = vec![NONE; (len + 1) * k];
        for pos in (0..len).rev() {
            let (row, below) = next.split_at_mut((pos + 1) * k);
            row[pos * k..].copy_from_slice(&below[..k]);
            row[pos * k + dense[pos]] = pos as u32;
            counts[dense[pos]] += 1;
        }
        Self { len, counts, next }
    }

    fn next(&self, pos: usize, letter: usize) -> Option<usize> {
        let p = self.next[pos * self.counts.len() + letter];
        (p != NONE).then_some(p as usize)
    }
}
