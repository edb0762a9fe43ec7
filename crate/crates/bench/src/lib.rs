//! Fixture inputs shared by the benchmarks.

use formwidth_core::golden::GoldenBlocks;
use formwidth_core::{parse_sequence, Sequence};

/// Hosts and patterns for containment timing: (host, pattern, expected).
pub const CONTAINMENT: [(&str, &str, bool); 4] = [
    ("12345124325", "12121", true),
    ("1234563412563", "123123", true),
    ("123456789123456789", "1221", false),
    ("121313242434", "12121", false),
];

pub fn sequence(text: &str) -> Sequence {
    parse_sequence(text).expect("fixture parses")
}

/// The longest golden entry for each alphabet size.
pub fn hardest_golden() -> Vec<Sequence> {
    let golden = GoldenBlocks::appendix_b();
    golden
        .sizes()
        .filter_map(|(n, _)| golden.block(n)?.iter().max_by_key(|u| u.len()).cloned())
        .collect()
}

pub fn all_golden() -> Vec<Sequence> {
    GoldenBlocks::appendix_b().iter().cloned().collect()
}
