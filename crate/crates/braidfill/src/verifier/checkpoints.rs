//! Braids the ζ chain must pass through, one per explicit conjugation.
//! The conjugation steps are checked against these by the word problem, so a
//! wrong conjugator cannot be absorbed by the later twist matching.

/// ζ after the first conjugation, ready for the +3 twist on red.
#[rustfmt::skip]
pub const AFTER_FIRST_CONJUGATION: [i32; 81] = [
    7, 6, 5, 4, 3, 2, 1, 5, 6, 7, 8, 4, 5, 6, 7, 3, 4, 5, 6, 2, 3, 4, 5, 5, 5, 10, 9, 8, 7, 6, 9,
    10, 8, 9, 8, 7, 6, -7, -8, -9, -10, 5, 6, 7, 8, 9, 10, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 1, -5, -4,
    -3, -2, -6, -5, -4, -3, -7, -6, -5, -4, -8, -7, -6, -5, -1, -2, -3, -4, -5, -6, -7,
];

/// After the +3 twist on red and the conjugation by `σ6⁻¹σ7`.
#[rustfmt::skip]
pub const AFTER_SECOND_CONJUGATION: [i32; 42] = [
    -7, 6, 4, 3, 2, 1, 2, 2, 7, 6, 5, 4, 3, 6, 7, 5, 6, 5, 4, 3, -4, -5, -6, -7, 2, 3, 4, 5, 6, 7,
    7, 6, 5, 4, 3, 2, 1, -2, -3, -4, -6, 7,
];

/// After the +1 axis twist and the conjugation that pulls black around.
#[rustfmt::skip]
pub const AFTER_THIRD_CONJUGATION: [i32; 126] = [
    -7, -6, -5, -4, -3, -2, -1, -1, -2, -3, -4, -5, -6, -7, -7, 6, 4, 3, 2, 1, 2, 2, 7, 6, 5, 4, 3,
    6, 7, 5, 6, 5, 4, 3, -4, -5, -6, -7, 2, 3, 4, 5, 6, 7, 7, 6, 5, 4, 3, 2, 1, -2, -3, -4, -6, 7,
    -1, -2, -3, -4, -5, -6, -7, -1, -2, -3, -4, -5, -6, -1, -2, -3, -4, -5, -1, -2, -3, -4, -1, -2,
    -3, -1, -2, -1, -1, -2, -3, -4, -5, -6, -7, -1, -2, -3, -4, -5, -6, -1, -2, -3, -4, -5, -1, -2,
    -3, -4, -1, -2, -3, -1, -2, -1, 7, 6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 7,
];
