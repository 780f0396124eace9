//! Braids of ribbons: bands of parallel strands moved around as blocks.

use serde::{Deserialize, Serialize};

use crate::braid::{half_twist_range, positive_permutation_braid, BraidWord, Permutation};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ribbon {
    pub label: String,
    pub width: usize,
    /// Half twists applied to the ribbon at the top of the braid.
    pub internal_half_twists: i64,
}

impl Ribbon {
    pub fn new(label: &str, width: usize) -> Self {
        Ribbon { label: label.to_string(), width, internal_half_twists: 0 }
    }

    pub fn twisted(label: &str, width: usize, half_twists: i64) -> Self {
        Ribbon { label: label.to_string(), width, internal_half_twists: half_twists }
    }
}

/// Ribbons in their top order, plus a word in block crossings.
///
/// Event `j > 0` crosses the ribbon currently in slot `j` over the one in slot
/// `j + 1`; `-j` is the inverse crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonBraid {
    pub ribbons: Vec<Ribbon>,
    pub events: Vec<i32>,
}

/// Positive crossing of a width-`a` block at `p..p+a` over the width-`b`
/// block to its right, embedded in `B_n`.
pub fn block_cross(n: usize, p: usize, a: usize, b: usize) -> Result<BraidWord> {
    let mut img: Vec<usize> = (1..=a).map(|i| b + i).collect();
    img.extend(1..=b);
    let local = positive_permutation_braid(&Permutation::from_one_line(&img)?);
    local.shifted(p - 1, n)
}

/// The block of width `a` at position `p` passes over (`sign > 0`) or under
/// the block of width `b` on its right.
pub fn block_move(n: usize, p: usize, a: usize, b: usize, sign: i32) -> Result<BraidWord> {
    if a == 0 || b == 0 {
        return Ok(BraidWord::identity(n));
    }
    let over = block_cross(n, p, a, b)?;
    BraidWord::new(n, over.letters().iter().map(|&l| sign.signum() * l).collect())
}

impl RibbonBraid {
    pub fn strands(&self) -> usize {
        self.ribbons.iter().map(|r| r.width).sum()
    }

    /// Strand ranges of each ribbon at the top, by label.
    pub fn top_ranges(&self) -> Vec<(String, std::ops::RangeInclusive<usize>)> {
        let mut start = 1;
        self.ribbons
            .iter()
            .map(|r| {
                let range = start..=start + r.width - 1;
                start += r.width;
                (r.label.clone(), range)
            })
            .collect()
    }

    pub fn expand(&self) -> Result<BraidWord> {
        if self.ribbons.iter().any(|r| r.width == 0) {
            return Err(Error::InvalidParameter("ribbon of width 0".into()));
        }
        let n = self.strands();
        let mut letters = Vec::new();
        for (r, (_, range)) in self.ribbons.iter().zip(self.top_ranges()) {
            if r.width > 1 && r.internal_half_twists != 0 {
                let d = half_twist_range(n, *range.start(), *range.end())?;
                letters.extend_from_slice(d.power(r.internal_half_twists).letters());
            }
        }
        let mut widths: Vec<usize> = self.ribbons.iter().map(|r| r.width).collect();
        for &e in &self.events {
            let j = e.unsigned_abs() as usize;
            if e == 0 || j >= widths.len() {
                return Err(Error::LetterOutOfRange { letter: e, strands: widths.len() });
            }
            let p = 1 + widths[..j - 1].iter().sum::<usize>();
            let (a, b) = (widths[j - 1], widths[j]);
            let w = if e > 0 { block_cross(n, p, a, b)? } else { block_cross(n, p, b, a)?.inverse() };
            letters.extend_from_slice(w.letters());
            widths.swap(j - 1, j);
        }
        BraidWord::new(n, letters)
    }
}
