//! Brute-force reference implementations shared by the integration tests.
//! Each one is written independently of the library's algorithms.

#![allow(dead_code)]

use formwidth_core::{parse_sequence, Sequence};
use rand::Rng;

pub fn s(text: &str) -> Sequence {
    parse_sequence(text).unwrap()
}

pub fn seq(letters: Vec<u32>) -> Sequence {
    Sequence::new(letters).unwrap()
}

/// Plain recursive subsequence test.
pub fn subsequence(hay: &[u32], needle: &[u32]) -> bool {
    match needle.split_first() {
        None => true,
        Some((first, rest)) => match hay.iter().position(|c| c == first) {
            Some(p) => subsequence(&hay[p + 1..], rest),
            None => false,
        },
    }
}

fn alphabet(letters: &[u32]) -> Vec<u32> {
    let mut a = letters.to_vec();
    a.sort_unstable();
    a.dedup();
    a
}

/// Containment by trying every injective renaming of the pattern's letters
/// into the host's letters.
pub fn contains_oracle(host: &Sequence, pattern: &Sequence) -> bool {
    let from = alphabet(pattern.letters());
    let to = alphabet(host.letters());
    if from.len() > to.len() {
        return false;
    }
    let mut image = vec![0u32; from.len()];
    let mut used = vec![false; to.len()];
    try_maps(
        0,
        &from,
        &to,
        &mut image,
        &mut used,
        host.letters(),
        pattern.letters(),
    )
}

fn try_maps(
    k: usize,
    from: &[u32],
    to: &[u32],
    image: &mut Vec<u32>,
    used: &mut Vec<bool>,
    host: &[u32],
    pattern: &[u32],
) -> bool {
    if k == from.len() {
        let renamed: Vec<u32> = pattern
            .iter()
            .map(|c| image[from.iter().position(|f| f == c).unwrap()])
            .collect();
        return subsequence(host, &renamed);
    }
    for j in 0..to.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        image[k] = to[j];
        if try_maps(k + 1, from, to, image, used, host, pattern) {
            return true;
        }
        used[j] = false;
    }
    false
}

/// Every canonical word of length `len` using at most `max_letters` letters.
pub fn canonical_words(len: usize, max_letters: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(len);
    grow(len, max_letters, 0, &mut word, &mut out);
    out
}

fn grow(len: usize, max_letters: u32, used: u32, word: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if word.len() == len {
        out.push(word.clone());
        return;
    }
    for c in 1..=(used + 1).min(max_letters) {
        word.push(c);
        grow(len, max_letters, used.max(c), word, out);
        word.pop();
    }
}

/// Longest alternation by checking `x y x y ...` of every length for every
/// ordered letter pair.
pub fn alternation_oracle(u: &Sequence) -> usize {
    let a = alphabet(u.letters());
    if a.is_empty() {
        return 0;
    }
    let mut best = 1;
    for &x in &a {
        for &y in &a {
            if x == y {
                continue;
            }
            let mut k = 2;
            loop {
                let w: Vec<u32> = (0..k).map(|t| if t % 2 == 0 { x } else { y }).collect();
                if !subsequence(u.letters(), &w) {
                    break;
                }
                best = best.max(k);
                k += 1;
            }
        }
    }
    best
}

/// Whether some letter pair alternates five times, testing `xyxyx` and
/// `yxyxy` for each unordered pair.
pub fn has_alt5_pairloop(u: &Sequence) -> bool {
    let a = alphabet(u.letters());
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i + 1..] {
            if subsequence(u.letters(), &[x, y, x, y, x])
                || subsequence(u.letters(), &[y, x, y, x, y])
            {
                return true;
            }
        }
    }
    false
}

fn counts(word: &[u32]) -> Vec<usize> {
    let n = word.iter().copied().max().unwrap_or(0) as usize;
    let mut c = vec![0; n];
    for &x in word {
        c[x as usize - 1] += 1;
    }
    c
}

/// Canonical words of length `2n` on exactly `n` letters, each twice, by
/// filtering every canonical word.
pub fn doubled_by_filter(n: usize) -> Vec<Vec<u32>> {
    canonical_words(2 * n, n as u32)
        .into_iter()
        .filter(|w| {
            let c = counts(w);
            c.len() == n && c.iter().all(|&k| k == 2)
        })
        .collect()
}

/// Canonical words of length `2n + 1` on exactly `n` letters with one letter
/// three times and a 5-alternation, by filtering every canonical word.
pub fn alt5_candidates_by_filter(n: usize) -> Vec<Vec<u32>> {
    canonical_words(2 * n + 1, n as u32)
        .into_iter()
        .filter(|w| {
            let c = counts(w);
            c.len() == n
                && c.iter().filter(|&&k| k == 3).count() == 1
                && c.iter().all(|&k| k == 2 || k == 3)
        })
        .filter(|w| has_alt5_pairloop(&seq(w.clone())))
        .collect()
}

/// The reference candidate scheme: insert a third copy of letter `i` at every
/// position of every doubled parent, canonicalize, and keep those passing the
/// pair-loop 5-alternation test.
pub fn alt5_candidates_by_insertion(parents: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for p in parents {
        let n = p.iter().copied().max().unwrap_or(0);
        for letter in 1..=n {
            for pos in 0..=p.len() {
                let mut w = p.clone();
                w.insert(pos, letter);
                let w = seq(w).canonicalize();
                if has_alt5_pairloop(&w) {
                    out.push(w.into_letters());
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Deletes the first letter that occurs only once and canonicalizes. Returns
/// `None` when every letter repeats.
pub fn strip_one_singleton(u: &Sequence) -> Option<Sequence> {
    let profile = u.occurrence_profile();
    let pos = u.letters().iter().position(|&c| profile.count(c) == 1)?;
    let mut letters = u.letters().to_vec();
    letters.remove(pos);
    Some(seq(letters).canonicalize())
}

/// Inserts a fresh letter at a random position.
pub fn plant_singleton(u: &Sequence, rng: &mut impl Rng) -> Sequence {
    let fresh = u.letters().iter().copied().max().unwrap_or(0) + 1;
    let mut letters = u.letters().to_vec();
    let pos = rng.random_range(0..=letters.len());
    letters.insert(pos, fresh);
    seq(letters)
}

/// A random word of length `len` over `1..=k`.
pub fn random_word(rng: &mut impl Rng, len: usize, k: u32) -> Sequence {
    seq((0..len).map(|_| rng.random_range(1..=k)).collect())
}

/// A random subsequence of `u` (each position kept with probability 1/2),
/// never empty when `u` is not.
pub fn random_subsequence(rng: &mut impl Rng, u: &Sequence) -> Sequence {
    loop {
        let kept: Vec<u32> = u
            .letters()
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.5))
            .collect();
        if !kept.is_empty() || u.is_empty() {
            return seq(kept);
        }
    }
}
