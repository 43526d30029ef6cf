//! Shared fixtures for the criterion benchmarks.

use negacode::codes::build_code;
use negacode::LinearCode;

/// Codes timed by each engine: `(label, q, n, delta)`.
pub const EXHAUSTIVE_CODES: &[(&str, u64, u64, u64)] = &[
    ("12_8_4_q5", 5, 12, 4),
    ("40_8_21_q3", 3, 40, 14),
    ("25_5_17_q7", 7, 25, 7),
    ("13_5_7_q5", 5, 13, 4),
];

pub const SEARCH_CODES: &[(&str, u64, u64, u64)] = &[
    ("41_33_5_q3", 3, 41, 2),
    ("40_36_3_q3", 3, 40, 2),
    ("24_18_5_q7", 7, 24, 5),
];

pub fn linear(q: u64, n: u64, delta: u64) -> LinearCode {
    build_code(q, n, delta, 0)
        .and_then(|c| c.to_linear())
        .expect("benchmark code builds")
}
