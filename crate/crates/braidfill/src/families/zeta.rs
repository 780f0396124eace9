use std::collections::BTreeMap;

use super::{FamilyBraid, BLACK, BLUE, GREEN, RED};
use crate::braid::BraidWord;

/// `δ` with an extra fixed red string in position 8. The red string clasps
/// one black string and passes the others without linking them.
#[rustfmt::skip]
pub const ZETA_LETTERS: [i32; 97] = [
    -7, -7, -2, -4, -3, -6, -5, -4, 7, 6, 5, 4, 3, 2, 1, 5, 6, 7, 8, 4, 5, 6, 7, 3, 4, 5, 6, 2, 3, 4,
    5, 5, 5, 10, 9, 8, 7, 6, 9, 10, 8, 9, 8, 7, 6, -7, -8, -9, -10, 5, 6, 7, 8, 9, 10, 10, 9, 8, 7, 6,
    5, 4, 3, 2, 1, 1, -5, -4, -3, -2, -6, -5, -4, -3, -7, -6, -5, -4, -8, -7, -6, -5, -1, -2, -3, -4,
    -5, -6, -7, 4, 5, 6, 3, 4, 2, 7, 7,
];

/// Starting position of the red string.
pub const ZETA_RED: usize = 8;

pub fn zeta_word() -> FamilyBraid {
    let word = BraidWord::new(11, ZETA_LETTERS.to_vec()).expect("valid word");
    let mut roles = BTreeMap::new();
    roles.insert(BLUE.to_string(), vec![1, 3, 5, 7, 10]);
    roles.insert(BLACK.to_string(), vec![2, 4, 6, 9]);
    roles.insert(GREEN.to_string(), vec![11]);
    roles.insert(RED.to_string(), vec![ZETA_RED]);
    FamilyBraid { word, roles }
}
