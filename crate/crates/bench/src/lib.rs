//! Inputs shared by the benchmarks.

use galois_core::IntPoly;

/// The worked examples, one per group that needs the resolvent machinery,
/// highest degree coefficient first.
pub const WORKED_EXAMPLES: [(&str, &[i64]); 12] = [
    ("S3", &[1, 0, 1, 1]),
    ("A3", &[1, 3, 0, -3]),
    ("S4", &[1, 0, 0, -1, -1]),
    ("A4", &[1, 0, 0, 8, 12]),
    ("V", &[1, 0, 0, 36, 63]),
    ("D8", &[1, 0, 0, 3, 3]),
    ("C4", &[1, 0, 0, 5, 5]),
    ("S5", &[1, 0, 0, 0, -1, -1]),
    ("A5", &[1, 0, 0, 0, 20, 16]),
    ("F20", &[1, 0, 0, 0, 15, 12]),
    ("D10", &[1, 0, 0, 0, -5, 12]),
    ("C5", &[1, 0, -10, 5, 10, 1]),
];

pub fn worked_examples() -> Vec<(&'static str, IntPoly)> {
    WORKED_EXAMPLES
        .iter()
        .map(|(name, c)| (*name, IntPoly::from_desc(c)))
        .collect()
}
