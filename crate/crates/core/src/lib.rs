//! Formation width, pattern containment and exhaustive classification of
//! sequences with formation width 4 and alternation length 5.
//!
//! The crate is organised bottom-up:
//!
//! - [`seq`] and [`pattern`]: sequences, canonical forms and containment up to
//!   renaming;
//! - [`formation`]: formations, the pruned binary-formation search for the
//!   formation width, its brute-force oracle and the formation length;
//! - [`enumerate`]: canonical generators of the candidate space and the
//!   width-4 filter;
//! - [`classify`]: the symbolic families and a two-way verification against
//!   the enumeration;
//! - [`extremal`]: an exact brute-force search for `Ex(u, n)` at tiny sizes;
//! - [`golden`]: the shipped reference list and its file format.

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod formation;
pub mod golden;
pub mod pattern;
pub mod seq;

pub use classify::{
    classify_all, classify_sequence, families, theorem_families, verify_theorem,
    ClassificationReport, FamilyDescriptor, FamilyMatch,
};
pub use enumerate::{
    enumerate_fw4_alt5, gen_alt5_candidates, gen_doubled, CandidateSet, EnumOptions, Provenance,
};
pub use error::{Error, Result};
pub use extremal::{ex_bruteforce, ExtremalResult};
pub use formation::{
    all_formations_contain, fl, formation_contains, fw, fw_naive, fw_search, BinaryFormation,
    Coverage, FlOutcome, FlReport, Formation, FwOptions, FwOutcome, FwReport, NaiveFw, Orientation,
    SearchFrontier,
};
pub use pattern::{contains_pattern, is_subsequence};
pub use seq::{parse_sequence, OccurrenceProfile, Sequence};
