use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A word in the Artin generators of `B_n`.
///
/// Letter `i > 0` is `σ_i` (left string over right), `-i` its inverse.
/// The leftmost letter acts first, i.e. the diagram is read top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct RawWord {
    strands: usize,
    word: Vec<i32>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = Error;
    fn try_from(r: RawWord) -> Result<Self> {
        BraidWord::new(r.strands, r.word)
    }
}

impl From<BraidWord> for RawWord {
    fn from(w: BraidWord) -> RawWord {
        RawWord { strands: w.strands, word: w.letters }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::ZeroStrands);
        }
        if strands > Permutation::MAX_DEGREE {
            return Err(Error::TooManyStrands(strands));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord::new(strands, Vec::new()).expect("identity word is valid")
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs until none are left.
    pub fn free_reduced(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate(&self, c: &BraidWord) -> Result<BraidWord> {
        c.inverse().compose(self)?.compose(c)
    }

    /// Conjugate by `Δ`: `σ_i ↦ σ_{n−i}`, the picture turned over left to right.
    pub fn flipped(&self) -> BraidWord {
        let n = self.strands as i32;
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|&l| l.signum() * (n - l.abs())).collect() }
    }

    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Re-embeds into `B_strands` with every index raised by `offset`.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        let letters = self.letters.iter().map(|&l| l.signum() * (l.abs() + offset as i32)).collect();
        BraidWord::new(strands, letters)
    }

    pub fn permutation(&self) -> Permutation {
        // pos[k] = current position of the strand that started at k
        let n = self.strands;
        let mut at: Vec<u8> = (0..n as u8).collect(); // at[position] = starting strand
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut img = vec![0u8; n];
        for (pos, &s) in at.iter().enumerate() {
            img[s as usize] = pos as u8;
        }
        Permutation::from_zero_based(img)
    }

    /// Closure components as cycles of the permutation.
    pub fn cycle_components(&self) -> Vec<Vec<usize>> {
        self.permutation().cycles()
    }

    /// For each letter, the starting positions of the two strands that cross
    /// there and the crossing sign.
    pub fn crossings(&self) -> Vec<(usize, usize, i32)> {
        let mut at: Vec<usize> = (1..=self.strands).collect();
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            out.push((at[i], at[i + 1], l.signum()));
            at.swap(i, i + 1);
        }
        out
    }

    /// Deletes the strand starting at position `s` (1-based), following it
    /// through the word, and renumbers what is left.
    pub fn erase_strand(&self, s: usize) -> Result<BraidWord> {
        if s == 0 || s > self.strands {
            return Err(Error::StrandOutOfRange { strand: s, strands: self.strands });
        }
        if self.strands == 1 {
            return Err(Error::ZeroStrands);
        }
        let mut p = s as i32;
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.abs();
            if i == p {
                p += 1;
            } else if i + 1 == p {
                p -= 1;
            } else {
                let j = if i < p { i } else { i - 1 };
                out.push(l.signum() * j);
            }
        }
        Ok(BraidWord { strands: self.strands - 1, letters: out })
    }

    /// Erases several strands given by starting position.
    pub fn erase_strands(&self, starts: &[usize]) -> Result<BraidWord> {
        let mut sorted = starts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut w = self.clone();
        for &s in sorted.iter().rev() {
            w = w.erase_strand(s)?;
        }
        Ok(w)
    }

    /// Follows a single position through the word: where does the strand
    /// starting at `s` end?
    pub fn track(&self, s: usize) -> usize {
        let mut p = s as i32;
        for &l in &self.letters {
            let i = l.abs();
            if i == p {
                p += 1;
            } else if i + 1 == p {
                p -= 1;
            }
        }
        p as usize
    }

    pub fn text(&self) -> String {
        self.to_string()
    }
}

/// Positive half twist `Δ_n = σ1 (σ2σ1) … (σ_{n−1}…σ1)`.
pub fn delta_braid(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::TooFewStrands { needed: 2, got: n });
    }
    half_twist_range(n, 1, n)
}

/// Full twist `θ_n = Δ_n²`, central in `B_n`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    Ok(delta_braid(n)?.power(2))
}

/// The half twist on strands `lo..=hi` embedded in `B_n`.
pub fn half_twist_range(n: usize, lo: usize, hi: usize) -> Result<BraidWord> {
    if lo == 0 || lo > hi || hi > n {
        return Err(Error::BadRange { lo, hi, strands: n });
    }
    let mut letters = Vec::new();
    for k in lo + 1..=hi {
        for i in (lo..k).rev() {
            letters.push(i as i32);
        }
    }
    BraidWord::new(n, letters)
}

/// The unique positive braid inducing `p` in which every pair of strands
/// crosses at most once (bubble sort of the target positions).
pub fn positive_permutation_braid(p: &Permutation) -> BraidWord {
    let n = p.degree();
    let mut targets: Vec<u8> = p.raw().to_vec();
    let mut letters = Vec::with_capacity(p.inversions());
    let mut swapped = true;
    while swapped {
        swapped = false;
        for i in 0..n.saturating_sub(1) {
            if targets[i] > targets[i + 1] {
                targets.swap(i, i + 1);
                letters.push(i as i32 + 1);
                swapped = true;
            }
        }
    }
    BraidWord::from_parts_unchecked(n.max(1), letters)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `Bn: i1 i2 ...`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.trim().to_string());
        let s = s.trim();
        let rest = s.strip_prefix('B').ok_or_else(bad)?;
        let (n, body) = rest.split_once(':').ok_or_else(bad)?;
        let strands: usize = n.trim().parse().map_err(|_| bad())?;
        let letters = body.split_whitespace().map(|t| t.parse::<i32>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        let d: BraidWord = "B10: 6 5 4 3 9 8 8 9 7 6 5 4 3 2 1 8 7 6 5 4 3 2 1 8 6".parse().unwrap();
        assert_eq!(d.len(), 25);
        assert_eq!(d.to_string().parse::<BraidWord>().unwrap(), d);
        assert!("B3: 1 3".parse::<BraidWord>().is_err());
        assert!("B3: 1 -3".parse::<BraidWord>().is_err());
        assert!("B3: 0".parse::<BraidWord>().is_err());
        assert!("3: 1".parse::<BraidWord>().is_err());
    }

    #[test]
    fn compose_and_conjugate() {
        let a = w(2, &[1]);
        assert_eq!(a.compose(&a).unwrap().letters(), &[1, 1]);
        assert_eq!(w(3, &[1]).conjugate(&w(3, &[2])).unwrap().letters(), &[-2, 1, 2]);
        assert!(w(2, &[1]).compose(&w(3, &[1])).is_err());
    }

    #[test]
    fn permutation_convention() {
        assert_eq!(w(2, &[1]).permutation().one_line(), vec![2, 1]);
        // strand starting at 1 ends at 3
        assert_eq!(w(3, &[1, 2]).permutation().image(1), 3);
    }

    #[test]
    fn half_twists() {
        assert!(half_twist_range(5, 5, 5).unwrap().is_empty());
        assert_eq!(half_twist_range(5, 4, 5).unwrap().letters(), &[4]);
        assert_eq!(half_twist_range(7, 5, 7).unwrap().letters(), &[5, 6, 5]);
        assert_eq!(delta_braid(2).unwrap().letters(), &[1]);
        assert_eq!(full_twist(2).unwrap().letters(), &[1, 1]);
        assert!(delta_braid(1).is_err());
        assert!(half_twist_range(5, 4, 6).is_err());
    }

    #[test]
    fn erase_examples() {
        assert!(w(2, &[1, 1]).erase_strand(2).unwrap().is_empty());
        let e = w(3, &[1, 2]).erase_strand(1).unwrap();
        assert_eq!(e.strands(), 2);
        assert!(e.is_empty());
        assert!(w(3, &[1]).erase_strand(4).is_err());
    }

    #[test]
    fn ppb_of_small_cycle() {
        let p = Permutation::from_one_line(&[2, 4, 5, 3, 1]).unwrap();
        let b = positive_permutation_braid(&p);
        assert_eq!(b.letters(), &[3, 4, 2, 3, 2, 1]);
        assert_eq!(b.permutation(), p);
    }
}
