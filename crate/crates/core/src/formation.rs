//! Formations and the formation width / formation length computations.
//!
//! An `(r, s)`-formation is a concatenation of `s` permutations of the same
//! `r` letters. A formation is *binary* when every block equals the first
//! block or its reverse. Every binary `(r, s)`-formation contains a pattern
//! `u` on `r` letters exactly when `s >= fw(u)`, so the width can be found by
//! searching binary formations only.
//!
//! [`fw_search`] grows binary formations block by block and only extends the
//! ones that still avoid the pattern: once a formation contains `u`, every
//! extension does too. [`fw_naive`] checks every binary formation of every
//! length and serves as the oracle for it.

use log::debug;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::{Host, Pattern};
use crate::seq::Sequence;

/// Longest pattern accepted by the binary-formation searches. The width never
/// exceeds the pattern length, and orientations are stored in 128 bits.
pub const MAX_PATTERN_LEN: usize = 128;

/// Default number of containment checks [`all_formations_contain`] may spend.
pub const DEFAULT_FORMATION_BUDGET: u64 = 1_000_000_000;

/// A concatenation of permutations of `{1..r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formation {
    r: usize,
    perms: Vec<Vec<u32>>,
}

impl Formation {
    pub fn new(r: usize, perms: Vec<Vec<u32>>) -> Result<Self> {
        for (i, block) in perms.iter().enumerate() {
            if !is_permutation(block, r) {
                return Err(Error::MalformedFormation(format!(
                    "block {i} is not a permutation of 1..={r}"
                )));
            }
        }
        Ok(Self { r, perms })
    }

    /// Splits a flat word into blocks of `r` letters.
    pub fn from_flat(r: usize, letters: &[u32]) -> Result<Self> {
        if r == 0 {
            return if letters.is_empty() {
                Ok(Self {
                    r,
                    perms: Vec::new(),
                })
            } else {
                Err(Error::MalformedFormation("r = 0 with nonempty word".into()))
            };
        }
        if letters.len() % r != 0 {
            return Err(Error::MalformedFormation(format!(
                "length {} is not a multiple of {r}",
                letters.len()
            )));
        }
        Self::new(r, letters.chunks(r).map(<[u32]>::to_vec).collect())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn blocks(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<u32>] {
        &self.perms
    }

    pub fn flatten(&self) -> Sequence {
        Sequence::from_letters_unchecked(self.perms.concat())
    }

    pub fn contains(&self, u: &Sequence) -> bool {
        formation_contains(self, u)
    }
}

fn is_permutation(block: &[u32], r: usize) -> bool {
    let mut seen = vec![false; r + 1];
    block.len() == r
        && block.iter().all(|&c| {
            let c = c as usize;
            (1..=r).contains(&c) && !std::mem::replace(&mut seen[c], true)
        })
}

/// Whether the flattened formation contains `u` up to renaming.
pub fn formation_contains(f: &Formation, u: &Sequence) -> bool {
    f.flatten().contains_pattern(u)
}

/// Block orientations of a binary formation: bit `i` set means block `i` is
/// the reverse of the first block. Bit 0 is always clear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    blocks: u32,
    bits: u128,
}

impl Orientation {
    /// The one-block formation.
    pub fn first() -> Self {
        Self { blocks: 1, bits: 0 }
    }

    pub fn from_bits(blocks: usize, bits: u128) -> Result<Self> {
        if blocks == 0 || blocks > MAX_PATTERN_LEN {
            return Err(Error::InvalidArgument(format!(
                "orientation needs 1..={MAX_PATTERN_LEN} blocks, got {blocks}"
            )));
        }
        if bits & 1 != 0 {
            return Err(Error::InvalidArgument(
                "the first block is always forward".into(),
            ));
        }
        if blocks < 128 && bits >> blocks != 0 {
            return Err(Error::InvalidArgument(
                "orientation bits beyond the last block".into(),
            ));
        }
        Ok(Self {
            blocks: blocks as u32,
            bits,
        })
    }

    pub fn blocks(&self) -> usize {
        self.blocks as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn is_reversed(&self, block: usize) -> bool {
        block < self.blocks() && (self.bits >> block) & 1 == 1
    }

    /// Appends one block, forward or reversed.
    ///
    /// Panics when the formation already has [`MAX_PATTERN_LEN`] blocks.
    pub fn push(self, reversed: bool) -> Self {
        assert!(self.blocks() < MAX_PATTERN_LEN, "orientation is full");
        Self {
            blocks: self.blocks + 1,
            bits: self.bits | (u128::from(reversed) << self.blocks),
        }
    }

    /// The flattened word over the identity base permutation `1..=r`.
    fn identity_word(&self, r: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(r * self.blocks());
        for block in 0..self.blocks() {
            if self.is_reversed(block) {
                out.extend((1..=r as u32).rev());
            } else {
                out.extend(1..=r as u32);
            }
        }
        out
    }
}

/// A binary formation: a base permutation `p` and, per block, `p` or its
/// reverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryFormation {
    base: Vec<u32>,
    orientation: Orientation,
}

impl BinaryFormation {
    pub fn new(base: Vec<u32>, orientation: Orientation) -> Result<Self> {
        if !is_permutation(&base, base.len()) {
            return Err(Error::MalformedFormation(
                "base must be a permutation of 1..=r".into(),
            ));
        }
        Ok(Self { base, orientation })
    }

    pub fn identity(r: usize, orientation: Orientation) -> Self {
        Self {
            base: (1..=r as u32).collect(),
            orientation,
        }
    }

    pub fn base(&self) -> &[u32] {
        &self.base
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn to_formation(&self) -> Formation {
        let reversed: Vec<u32> = self.base.iter().rev().copied().collect();
        let perms = (0..self.orientation.blocks())
            .map(|i| {
                if self.orientation.is_reversed(i) {
                    reversed.clone()
                } else {
                    self.base.clone()
                }
            })
            .collect();
        Formation {
            r: self.base.len(),
            perms,
        }
    }

    pub fn flatten(&self) -> Sequence {
        self.to_formation().flatten()
    }
}

/// The binary formations of the current length that still avoid the target,
/// all over the identity base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchFrontier {
    blocks: usize,
    pending: Vec<Orientation>,
}

impl SearchFrontier {
    /// The one-block frontier: the base permutation, unless it already
    /// contains the pattern.
    fn start(pattern: &Pattern, r: usize) -> Self {
        let first = Orientation::first();
        let pending = if avoids(pattern, r, first) {
            vec![first]
        } else {
            Vec::new()
        };
        Self { blocks: 1, pending }
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn pending(&self) -> &[Orientation] {
        &self.pending
    }

    pub fn is_empty(&self) -> bool {
        self.pending.is_empty()
    }

    /// Extends every member by `p` and by its reverse and keeps the children
    /// that still avoid the pattern. Returns the next frontier and the number
    /// of children checked.
    fn advance(&self, pattern: &Pattern, r: usize, parallel: bool) -> (Self, usize) {
        // With one letter p equals its reverse; both children would coincide.
        let reversals: &[bool] = if r > 1 { &[false, true] } else { &[false] };
        let children: Vec<Orientation> = self
            .pending
            .iter()
            .flat_map(|o| reversals.iter().map(move |&rev| o.push(rev)))
            .collect();
        let mut pending: Vec<Orientation> = if parallel {
            children
                .par_iter()
                .copied()
                .filter(|&o| avoids(pattern, r, o))
                .collect()
        } else {
            children
                .iter()
                .copied()
                .filter(|&o| avoids(pattern, r, o))
                .collect()
        };
        pending.sort_unstable();
        (
            Self {
                blocks: self.blocks + 1,
                pending,
            },
            children.len(),
        )
    }
}

fn avoids(pattern: &Pattern, r: usize, o: Orientation) -> bool {
    !pattern.is_contained_in(&Host::new(&o.identity_word(r)))
}

/// Options for [`fw_search`].
#[derive(Debug, Clone, Copy, Default)]
pub struct FwOptions {
    /// Stop once the width is known to exceed this many blocks.
    pub limit: Option<usize>,
    /// Check each level's children on the rayon pool.
    pub parallel: bool,
}

/// Result of a width search that may stop early.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FwOutcome {
    /// The width is exactly this value.
    Exact(usize),
    /// The width is strictly greater than this value.
    Exceeds(usize),
}

impl FwOutcome {
    pub fn exact(self) -> Option<usize> {
        match self {
            FwOutcome::Exact(s) => Some(s),
            FwOutcome::Exceeds(_) => None,
        }
    }
}

/// Outcome and statistics of [`fw_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FwReport {
    pub outcome: FwOutcome,
    /// Binary formations checked for containment, over all levels.
    pub nodes_visited: u64,
    /// Formations checked at each length `1, 2, ...`.
    pub levels: Vec<usize>,
}

fn check_pattern(u: &Sequence) -> Result<()> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if u.len() > MAX_PATTERN_LEN {
        return Err(Error::PatternTooLong {
            len: u.len(),
            max: MAX_PATTERN_LEN,
        });
    }
    Ok(())
}

/// Formation width of `u`.
pub fn fw(u: &Sequence) -> Result<usize> {
    let report = fw_search(u, &FwOptions::default())?;
    report
        .outcome
        .exact()
        .ok_or_else(|| Error::Internal("unbounded search stopped early".into()))
}

/// Formation width by frontier search over binary formations.
pub fn fw_search(u: &Sequence, opts: &FwOptions) -> Result<FwReport> {
    check_pattern(u)?;
    if opts.limit == Some(0) {
        return Err(Error::InvalidArgument(
            "width limit must be at least 1".into(),
        ));
    }
    let pattern = Pattern::new(u);
    let r = pattern.distinct();

    let mut frontier = SearchFrontier::start(&pattern, r);
    let mut levels = vec![1];
    let mut nodes_visited = 1u64;
    while !frontier.is_empty() {
        let next_blocks = frontier.blocks() + 1;
        if let Some(limit) = opts.limit {
            if next_blocks > limit {
                return Ok(FwReport {
                    outcome: FwOutcome::Exceeds(limit),
                    nodes_visited,
                    levels,
                });
            }
        }
        // Every (r, |u|)-formation contains u: pick u[i] from block i.
        if next_blocks > u.len() {
            return Err(Error::Internal(format!(
                "frontier for {u} still nonempty at {} blocks",
                frontier.blocks()
            )));
        }
        let (next, checked) = frontier.advance(&pattern, r, opts.parallel);
        debug!(
            "fw({u}) level {next_blocks}: checked {checked}, {} avoid",
            next.pending.len()
        );
        levels.push(checked);
        nodes_visited += checked as u64;
        frontier = next;
    }
    Ok(FwReport {
        outcome: FwOutcome::Exact(frontier.blocks()),
        nodes_visited,
        levels,
    })
}

/// Result of [`fw_naive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaiveFw {
    /// `Exceeds(cap)` when no length up to the cap works.
    pub outcome: FwOutcome,
    /// Binary formations checked, over all lengths tried.
    pub nodes: u64,
}

/// Largest block count [`fw_naive`] accepts as its cap.
pub const MAX_NAIVE_BLOCKS: usize = 40;

/// Smallest `s` such that every binary `(r, s)`-formation contains `u`, by
/// checking all `2^(s-1)` of them for `s = 1, 2, ..., max_blocks`.
pub fn fw_naive(u: &Sequence, max_blocks: usize) -> Result<NaiveFw> {
    check_pattern(u)?;
    if max_blocks == 0 || max_blocks > MAX_NAIVE_BLOCKS {
        return Err(Error::InvalidArgument(format!(
            "naive cap must be in 1..={MAX_NAIVE_BLOCKS}"
        )));
    }
    let pattern = Pattern::new(u);
    let r = pattern.distinct();
    let mut nodes = 0u64;
    for s in 1..=max_blocks {
        let mut all = true;
        for m in 0..(1u128 << (s - 1)) {
            let o = Orientation::from_bits(s, m << 1)?;
            nodes += 1;
            if avoids(&pattern, r, o) {
                all = false;
            }
        }
        if all {
            return Ok(NaiveFw {
                outcome: FwOutcome::Exact(s),
                nodes,
            });
        }
    }
    Ok(NaiveFw {
        outcome: FwOutcome::Exceeds(max_blocks),
        nodes,
    })
}

/// Whether every `(r, s)`-formation contains a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coverage {
    AllContain,
    /// A formation avoiding the pattern.
    Avoided(Formation),
    /// The budget ran out before the question was settled.
    Unresolved {
        checked: u64,
    },
}

impl Coverage {
    pub fn resolved(&self) -> Option<bool> {
        match self {
            Coverage::AllContain => Some(true),
            Coverage::Avoided(_) => Some(false),
            Coverage::Unresolved { .. } => None,
        }
    }
}

/// All permutations of `1..=r` in lexicographic order.
fn permutations(r: usize) -> Vec<Vec<u32>> {
    let mut p: Vec<u32> = (1..=r as u32).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Whether every `(r, s)`-formation contains `u`, by checking every formation
/// whose first block is the identity (renaming the letters of a formation does
/// not change what it contains). At most `budget` formations are checked.
pub fn all_formations_contain(r: usize, s: usize, u: &Sequence, budget: u64) -> Result<Coverage> {
    if r < u.distinct() {
        return Err(Error::InvalidArgument(format!(
            "r = {r} is smaller than the {} letters of the pattern",
            u.distinct()
        )));
    }
    if r == 0 || s == 0 {
        // The only formation is the empty word.
        return Ok(if u.is_empty() {
            Coverage::AllContain
        } else {
            Coverage::Avoided(Formation {
                r,
                perms: Vec::new(),
            })
        });
    }
    if r > 10 {
        return Ok(Coverage::Unresolved { checked: 0 });
    }
    let pattern = Pattern::new(u);
    let perms = permutations(r);
    let identity = perms[0].clone();
    // odometer over the permutations of blocks 1..s
    let mut digits = vec![0usize; s - 1];
    let mut word: Vec<u32> = Vec::with_capacity(r * s);
    let mut checked = 0u64;
    loop {
        if checked == budget {
            return Ok(Coverage::Unresolved { checked });
        }
        word.clear();
        word.extend_from_slice(&identity);
        for &d in &digits {
            word.extend_from_slice(&perms[d]);
        }
        checked += 1;
        if !pattern.is_contained_in(&Host::new(&word)) {
            return Formation::from_flat(r, &word).map(Coverage::Avoided);
        }
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return Ok(Coverage::AllContain);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < perms.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// How a formation-length computation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum FlOutcome {
    Resolved {
        fl: usize,
    },
    /// No `r <= max_r` works.
    BeyondMaxR {
        max_r: usize,
    },
    /// The formation budget ran out while checking this `r`.
    WorkCap {
        r: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlReport {
    pub fw: usize,
    #[serde(flatten)]
    pub outcome: FlOutcome,
}

/// Formation length: the smallest `r <= max_r` such that every
/// `(r, fw(u))`-formation contains `u`.
///
/// If every `(r, s)`-formation contains `u`, so does every
/// `(r + 1, s)`-formation (delete one letter throughout), so the first success
/// is the answer.
pub fn fl(u: &Sequence, max_r: usize, budget: u64) -> Result<FlReport> {
    let width = fw(u)?;
    let r0 = u.distinct();
    if max_r < r0 {
        return Err(Error::InvalidArgument(format!(
            "max_r = {max_r} is smaller than the {r0} letters of the pattern"
        )));
    }
    for r in r0..=max_r {
        match all_formations_contain(r, width, u, budget)? {
            Coverage::AllContain => {
                return Ok(FlReport {
                    fw: width,
                    outcome: FlOutcome::Resolved { fl: r },
                })
            }
            Coverage::Avoided(_) => continue,
            Coverage::Unresolved { .. } => {
                return Ok(FlReport {
                    fw: width,
                    outcome: FlOutcome::WorkCap { r },
                })
            }
        }
    }
    Ok(FlReport {
        fw: width,
        outcome: FlOutcome::BeyondMaxR { max_r },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::parse_sequence;

    fn s(text: &str) -> Sequence {
        parse_sequence(text).unwrap()
    }

    fn formation(blocks: &[&str]) -> Formation {
        let perms: Vec<Vec<u32>> = blocks.iter().map(|b| s(b).into_letters()).collect();
        Formation::new(perms[0].len(), perms).unwrap()
    }

    #[test]
    fn formation_validation() {
        assert!(Formation::new(2, vec![vec![1, 1]]).is_err());
        assert!(Formation::new(2, vec![vec![1, 3]]).is_err());
        assert!(Formation::new(3, vec![vec![1, 2]]).is_err());
        assert!(Formation::from_flat(2, &[1, 2, 2]).is_err());
        let f = Formation::from_flat(3, &[1, 2, 3, 3, 1, 2]).unwrap();
        assert_eq!(f.blocks(), 2);
        assert_eq!(f.perms()[1], vec![3, 1, 2]);
        assert_eq!(Formation::from_flat(3, f.flatten().letters()).unwrap(), f);
    }

    #[test]
    fn formation_contains_examples() {
        assert!(formation_contains(&formation(&["12", "12"]), &s("121")));
        assert!(!formation_contains(&formation(&["12"]), &s("11")));
        assert!(formation_contains(&formation(&["12", "21"]), &s("121")));
    }

    #[test]
    fn orientation_bits() {
        let o = Orientation::first().push(true).push(false).push(true);
        assert_eq!(o.blocks(), 4);
        assert_eq!(o.bits(), 0b1010);
        assert_eq!(o.identity_word(3), vec![1, 2, 3, 3, 2, 1, 1, 2, 3, 3, 2, 1]);
        assert!(Orientation::from_bits(2, 1).is_err());
        assert!(Orientation::from_bits(2, 0b100).is_err());
        assert_eq!(Orientation::from_bits(4, 0b1010).unwrap(), o);
        let bf = BinaryFormation::new(vec![2, 1, 3], o).unwrap();
        assert_eq!(bf.flatten(), s("213312213312"));
        assert!(BinaryFormation::new(vec![1, 1], o).is_err());
    }

    #[test]
    fn fw_examples() {
        assert_eq!(fw(&s("12121")).unwrap(), 4);
        assert_eq!(fw(&s("121212")).unwrap(), 5);
        assert_eq!(fw(&s("121")).unwrap(), 2);
        assert_eq!(fw(&s("12")).unwrap(), 1);
        assert_eq!(fw(&s("11")).unwrap(), 2);
        assert_eq!(fw(&s("111")).unwrap(), 3);
        assert_eq!(fw(&s("1")).unwrap(), 1);
        assert_eq!(fw(&Sequence::empty()), Err(Error::EmptyPattern));
    }

    #[test]
    fn fw_search_statistics_for_ababa() {
        // Of the length-3 formations only 122112 avoids 12121; both of its
        // children contain it.
        let report = fw_search(&s("12121"), &FwOptions::default()).unwrap();
        assert_eq!(report.outcome, FwOutcome::Exact(4));
        assert_eq!(report.levels, vec![1, 2, 4, 2]);
        assert_eq!(report.nodes_visited, 9);
    }

    #[test]
    fn fw_search_limit() {
        let u = s("121212");
        let capped = fw_search(
            &u,
            &FwOptions {
                limit: Some(4),
                parallel: false,
            },
        )
        .unwrap();
        assert_eq!(capped.outcome, FwOutcome::Exceeds(4));
        let exact = fw_search(
            &u,
            &FwOptions {
                limit: Some(5),
                parallel: false,
            },
        )
        .unwrap();
        assert_eq!(exact.outcome, FwOutcome::Exact(5));
        assert!(fw_search(
            &u,
            &FwOptions {
                limit: Some(0),
                parallel: false
            }
        )
        .is_err());
    }

    #[test]
    fn fw_parallel_matches_sequential() {
        for text in ["12121", "1233121", "123421431", "1234561234526"] {
            let u = s(text);
            let a = fw_search(
                &u,
                &FwOptions {
                    limit: None,
                    parallel: false,
                },
            )
            .unwrap();
            let b = fw_search(
                &u,
                &FwOptions {
                    limit: None,
                    parallel: true,
                },
            )
            .unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn fw_rejects_long_patterns() {
        let u = Sequence::new(vec![1; MAX_PATTERN_LEN + 1]).unwrap();
        assert!(matches!(fw(&u), Err(Error::PatternTooLong { .. })));
        let u = Sequence::new(vec![1; MAX_PATTERN_LEN]).unwrap();
        assert_eq!(fw(&u).unwrap(), MAX_PATTERN_LEN);
    }

    #[test]
    fn fw_naive_examples() {
        assert_eq!(fw_naive(&s("11"), 10).unwrap().outcome, FwOutcome::Exact(2));
        assert_eq!(fw_naive(&s("12"), 10).unwrap().outcome, FwOutcome::Exact(1));
        let ababa = fw_naive(&s("12121"), 10).unwrap();
        assert_eq!(ababa.outcome, FwOutcome::Exact(4));
        assert_eq!(ababa.nodes, 1 + 2 + 4 + 8);
        assert_eq!(
            fw_naive(&s("12121"), 3).unwrap().outcome,
            FwOutcome::Exceeds(3)
        );
        assert!(fw_naive(&s("1"), 0).is_err());
    }

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![1, 2, 3]);
        assert_eq!(p[1], vec![1, 3, 2]);
        assert_eq!(p[5], vec![3, 2, 1]);
        assert_eq!(permutations(1), vec![vec![1]]);
    }

    #[test]
    fn all_formations_contain_examples() {
        assert_eq!(
            all_formations_contain(2, 1, &s("12"), 100).unwrap(),
            Coverage::AllContain
        );
        assert!(matches!(
            all_formations_contain(2, 2, &s("12121"), 100).unwrap(),
            Coverage::Avoided(_)
        ));
        // every (2,4)-formation is binary, and fw(12121) = 4
        assert_eq!(
            all_formations_contain(2, 4, &s("12121"), 100).unwrap(),
            Coverage::AllContain
        );
        assert_eq!(
            all_formations_contain(3, 4, &s("12121"), 3).unwrap(),
            Coverage::Unresolved { checked: 3 }
        );
        assert!(all_formations_contain(1, 2, &s("12"), 100).is_err());
    }

    #[test]
    fn avoided_formation_is_a_real_witness() {
        let u = s("12121");
        let Coverage::Avoided(f) = all_formations_contain(3, 3, &u, 1000).unwrap() else {
            panic!("expected a counterexample");
        };
        assert!(!f.contains(&u));
        assert_eq!(f.perms()[0], vec![1, 2, 3]);
    }

    #[test]
    fn fl_examples() {
        assert_eq!(
            fl(&s("12"), 4, 1000).unwrap(),
            FlReport {
                fw: 1,
                outcome: FlOutcome::Resolved { fl: 2 }
            }
        );
        assert_eq!(
            fl(&s("12121"), 4, 1000).unwrap(),
            FlReport {
                fw: 4,
                outcome: FlOutcome::Resolved { fl: 2 }
            }
        );
        assert!(fl(&s("123"), 2, 1000).is_err());
    }
}
