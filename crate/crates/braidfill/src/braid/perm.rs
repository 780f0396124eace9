use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
///
/// `image(s)` is the end position of the strand that starts at position `s`.
/// Stored 0-based; the public surface is 1-based like the braid words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    img: Vec<u8>,
}

impl Permutation {
    pub const MAX_DEGREE: usize = 255;

    pub fn identity(n: usize) -> Self {
        assert!(n <= Self::MAX_DEGREE, "permutation degree {n} too large");
        Permutation { img: (0..n as u8).collect() }
    }

    /// Builds from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > Self::MAX_DEGREE {
            return Err(Error::TooManyStrands(n));
        }
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(images.to_vec()));
            }
            seen[v - 1] = true;
            img.push((v - 1) as u8);
        }
        Ok(Permutation { img })
    }

    pub(crate) fn from_zero_based(img: Vec<u8>) -> Self {
        Permutation { img }
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.img
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// 1-based image of 1-based point `s`.
    pub fn image(&self, s: usize) -> usize {
        self.img[s - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { img: inv }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { img: self.img.iter().map(|&v| other.img[v as usize]).collect() }
    }

    pub fn conjugate_by(&self, c: &Permutation) -> Self {
        c.inverse().then(self).then(c)
    }

    /// Cycles in order of their smallest element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.img[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Sorted multiset of cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn is_full_cycle(&self) -> bool {
        self.degree() > 0 && self.cycles().len() == 1
    }

    pub fn inversions(&self) -> usize {
        let v = &self.img;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_one_line(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.one_line()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[2, 3]).is_err());
    }

    #[test]
    fn cycles_and_inversions() {
        let p = Permutation::from_one_line(&[2, 4, 5, 3, 1]).unwrap();
        assert_eq!(p.cycles(), vec![vec![1, 2, 4, 3, 5]]);
        assert_eq!(p.inversions(), 6);
        assert!(p.then(&p.inverse()).is_identity());
    }
}
