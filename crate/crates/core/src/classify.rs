//! The families of reduced sequences with formation width 4 and alternation
//! length 5, membership tests, and a two-way check against the exhaustive
//! enumeration.
//!
//! Family ids `F01`..`F12` are the fixed sequences and `F13`..`F22` the
//! parametric ones, in the order they are usually listed. Letters are written
//! in canonical form; a sequence belongs to a family when its reduced
//! canonical form, or that of its reverse, equals an instance.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::enumerate::{enumerate_fw4_alt5, EnumOptions};
use crate::error::{Error, Result};
use crate::seq::{parse_sequence, Sequence};

type Builder = fn(u32, u32) -> Vec<u32>;

#[derive(Debug, Clone, Copy)]
enum Shape {
    /// A single literal sequence.
    Fixed(&'static str),
    /// One instance per admissible `n` (and per index `i`, when present).
    Parametric {
        min_n: usize,
        index: Option<fn(usize) -> RangeInclusive<usize>>,
        build: Builder,
    },
}

/// A symbolic description of one family.
#[derive(Debug, Clone, Copy)]
pub struct FamilyDescriptor {
    pub id: &'static str,
    /// Human-readable form, e.g. `1..n 1..n i`.
    pub label: &'static str,
    /// Admissible parameter ranges.
    pub params: &'static str,
    shape: Shape,
}

fn run(a: u32, b: u32) -> impl Iterator<Item = u32> {
    a..=b
}

fn cat<const K: usize>(parts: [Vec<u32>; K]) -> Vec<u32> {
    parts.concat()
}

fn up(a: u32, b: u32) -> Vec<u32> {
    run(a, b).collect()
}

const FIXED: [&str; 12] = [
    "12121",
    "1233121",
    "123412134",
    "123441213",
    "123413214",
    "123431243",
    "123421432",
    "123431214",
    "123432143",
    "123412143",
    "12345124325",
    "12345312154",
];

const FIXED_IDS: [&str; 12] = [
    "F01", "F02", "F03", "F04", "F05", "F06", "F07", "F08", "F09", "F10", "F11", "F12",
];

fn i_from_3(n: usize) -> RangeInclusive<usize> {
    3..=n - 1
}

fn i_from_1_to_n_minus_1(n: usize) -> RangeInclusive<usize> {
    1..=n - 1
}

fn i_from_1_to_n_minus_2(n: usize) -> RangeInclusive<usize> {
    1..=n - 2
}

const PARAMETRIC: [FamilyDescriptor; 10] = [
    FamilyDescriptor {
        id: "F13",
        label: "1 2..n 1 3..i 2 (i+1)..n 1",
        params: "n >= 4, 3 <= i <= n-1",
        shape: Shape::Parametric {
            min_n: 4,
            index: Some(i_from_3),
            build: |n, i| cat([up(1, n), vec![1], up(3, i), vec![2], up(i + 1, n), vec![1]]),
        },
    },
    FamilyDescriptor {
        id: "F14",
        label: "1 2..n 1 2..(i-1) (i+1)..n i 1",
        params: "n >= 4, 3 <= i <= n-1",
        shape: Shape::Parametric {
            min_n: 4,
            index: Some(i_from_3),
            build: |n, i| cat([up(1, n), up(1, i - 1), up(i + 1, n), vec![i, 1]]),
        },
    },
    FamilyDescriptor {
        id: "F15",
        label: "1 2..n 1 3..n 2 1",
        params: "n >= 3",
        shape: Shape::Parametric {
            min_n: 3,
            index: None,
            build: |n, _| cat([up(1, n), vec![1], up(3, n), vec![2, 1]]),
        },
    },
    FamilyDescriptor {
        id: "F16",
        label: "1..n 2..n 2 1",
        params: "n >= 3",
        shape: Shape::Parametric {
            min_n: 3,
            index: None,
            build: |n, _| cat([up(1, n), up(2, n), vec![2, 1]]),
        },
    },
    FamilyDescriptor {
        id: "F17",
        label: "1..n 2 1 3..n 1",
        params: "n >= 3",
        shape: Shape::Parametric {
            min_n: 3,
            index: None,
            build: |n, _| cat([up(1, n), vec![2, 1], up(3, n), vec![1]]),
        },
    },
    FamilyDescriptor {
        id: "F18",
        label: "1..n 2 1 3..n 2",
        params: "n >= 3",
        shape: Shape::Parametric {
            min_n: 3,
            index: None,
            build: |n, _| cat([up(1, n), vec![2, 1], up(3, n), vec![2]]),
        },
    },
    FamilyDescriptor {
        id: "F19",
        label: "1..n 1..n i",
        params: "n >= 2, 1 <= i <= n-1",
        shape: Shape::Parametric {
            min_n: 2,
            index: Some(i_from_1_to_n_minus_1),
            build: |n, i| cat([up(1, n), up(1, n), vec![i]]),
        },
    },
    FamilyDescriptor {
        id: "F20",
        label: "1..n 1..(n-1) i n",
        params: "n >= 3, 1 <= i <= n-2",
        shape: Shape::Parametric {
            min_n: 3,
            index: Some(i_from_1_to_n_minus_2),
            build: |n, i| cat([up(1, n), up(1, n - 1), vec![i, n]]),
        },
    },
    FamilyDescriptor {
        id: "F21",
        label: "1..n 1 2 4..n 3 2",
        params: "n >= 4",
        shape: Shape::Parametric {
            min_n: 4,
            index: None,
            build: |n, _| cat([up(1, n), vec![1, 2], up(4, n), vec![3, 2]]),
        },
    },
    FamilyDescriptor {
        id: "F22",
        label: "1..n 1 3..n 3 2",
        params: "n >= 4",
        shape: Shape::Parametric {
            min_n: 4,
            index: None,
            build: |n, _| cat([up(1, n), vec![1], up(3, n), vec![3, 2]]),
        },
    },
];

/// Every family, fixed ones first, in id order.
pub fn families() -> Vec<FamilyDescriptor> {
    FIXED
        .iter()
        .zip(FIXED_IDS)
        .map(|(&text, id)| FamilyDescriptor {
            id,
            label: text,
            params: "fixed",
            shape: Shape::Fixed(text),
        })
        .chain(PARAMETRIC)
        .collect()
}

/// Looks a family up by id.
pub fn family(id: &str) -> Option<FamilyDescriptor> {
    families().into_iter().find(|f| f.id == id)
}

impl FamilyDescriptor {
    pub fn is_fixed(&self) -> bool {
        matches!(self.shape, Shape::Fixed(_))
    }

    /// Whether the family takes an index parameter `i`.
    pub fn is_indexed(&self) -> bool {
        matches!(self.shape, Shape::Parametric { index: Some(_), .. })
    }

    /// Admissible `i` values at alphabet size `n` (empty when `n` is not
    /// admissible; `[None]` for families without an index).
    pub fn indices(&self, n: usize) -> Vec<Option<usize>> {
        match self.shape {
            Shape::Fixed(text) => {
                if fixed_sequence(text).distinct() == n {
                    vec![None]
                } else {
                    Vec::new()
                }
            }
            Shape::Parametric { min_n, index, .. } => {
                if n < min_n {
                    Vec::new()
                } else if let Some(range) = index {
                    range(n).map(Some).collect()
                } else {
                    vec![None]
                }
            }
        }
    }

    /// The canonical instance for `(n, i)`.
    pub fn instantiate(&self, n: usize, i: Option<usize>) -> Result<Sequence> {
        if !self.indices(n).contains(&i) {
            return Err(Error::InvalidArgument(format!(
                "{} ({}) has no instance at n = {n}, i = {i:?}",
                self.id, self.params
            )));
        }
        Ok(match self.shape {
            Shape::Fixed(text) => fixed_sequence(text),
            Shape::Parametric { build, .. } => {
                Sequence::from_letters_unchecked(build(n as u32, i.unwrap_or(0) as u32))
            }
        })
    }

    /// All instances at alphabet size `n`, with their index parameter.
    pub fn instances(&self, n: usize) -> Vec<(Option<usize>, Sequence)> {
        self.indices(n)
            .into_iter()
            .map(|i| (i, self.instantiate(n, i).expect("admissible parameters")))
            .collect()
    }
}

fn fixed_sequence(text: &str) -> Sequence {
    parse_sequence(text).expect("valid literal")
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument("families start at n = 2".into()));
    }
    Ok(())
}

/// Canonical family instances on exactly `n` letters, closed under
/// reversal followed by canonicalization.
pub fn theorem_families(n: usize) -> Result<BTreeSet<Sequence>> {
    check_n(n)?;
    let mut out = BTreeSet::new();
    for f in families() {
        for (_, u) in f.instances(n) {
            out.insert(u.reversed().canonicalize());
            out.insert(u);
        }
    }
    Ok(out)
}

/// One family a sequence belongs to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FamilyMatch {
    pub family: &'static str,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    /// The reverse of the reduced sequence is the instance.
    pub reversed: bool,
}

/// Every family match of `u`, sorted by family id then parameters.
///
/// Letters occurring once are stripped first; they do not change the
/// formation width or the alternation length.
pub fn classify_all(u: &Sequence) -> Vec<FamilyMatch> {
    let reduced = u.reduced();
    if reduced.is_empty() {
        return Vec::new();
    }
    let n = reduced.distinct();
    let backwards = reduced.reversed().canonicalize();
    let mut matches = Vec::new();
    for f in families() {
        for (i, inst) in f.instances(n) {
            if inst == reduced {
                matches.push(FamilyMatch {
                    family: f.id,
                    n,
                    i,
                    reversed: false,
                });
            }
            if inst == backwards {
                matches.push(FamilyMatch {
                    family: f.id,
                    n,
                    i,
                    reversed: true,
                });
            }
        }
    }
    matches.sort();
    matches
}

/// The first family match of `u` by id, if any. Families overlap, so a
/// sequence may belong to several; see [`classify_all`].
pub fn classify_sequence(u: &Sequence) -> Option<FamilyMatch> {
    classify_all(u).into_iter().next()
}

/// Two-way comparison of the enumeration with the family instances at one
/// alphabet size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub enumerated: usize,
    pub family_instances: usize,
    /// Enumerated sequences grouped by their first matching family.
    pub matched: BTreeMap<&'static str, Vec<Sequence>>,
    /// Enumerated sequences that no family produces.
    pub unmatched_enumerated: Vec<Sequence>,
    /// Family instances the enumeration did not produce.
    pub unmatched_family: Vec<Sequence>,
    /// Family instances belonging to more than one family.
    pub overlaps: Vec<Overlap>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub sequence: Sequence,
    pub families: Vec<FamilyMatch>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.unmatched_enumerated.is_empty() && self.unmatched_family.is_empty()
    }
}

/// Enumerates every sequence on `n` letters with formation width 4 and
/// alternation length 5 and compares the result with [`theorem_families`].
pub fn verify_theorem(n: usize, opts: &EnumOptions) -> Result<ClassificationReport> {
    check_n(n)?;
    let enumerated: BTreeSet<Sequence> = enumerate_fw4_alt5(n, opts)?
        .into_members()
        .into_iter()
        .collect();
    let instances = theorem_families(n)?;

    let mut matched: BTreeMap<&'static str, Vec<Sequence>> = BTreeMap::new();
    for u in enumerated.intersection(&instances) {
        let first = classify_sequence(u)
            .ok_or_else(|| Error::Internal(format!("family instance {u} does not classify")))?;
        matched.entry(first.family).or_default().push(u.clone());
    }
    let overlaps = instances
        .iter()
        .filter_map(|u| {
            let fams = classify_all(u);
            let distinct: BTreeSet<_> = fams.iter().map(|m| m.family).collect();
            (distinct.len() > 1).then(|| Overlap {
                sequence: u.clone(),
                families: fams,
            })
        })
        .collect();
    Ok(ClassificationReport {
        n,
        enumerated: enumerated.len(),
        family_instances: instances.len(),
        matched,
        unmatched_enumerated: enumerated.difference(&instances).cloned().collect(),
        unmatched_family: instances.difference(&enumerated).cloned().collect(),
        overlaps,
    })
}
