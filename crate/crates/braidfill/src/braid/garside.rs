//! Left normal form over permutation braids.

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use super::word::{positive_permutation_braid, BraidWord};
use crate::error::{Error, Result};

/// A permutation read as a positive permutation braid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalFactor(pub Permutation);

impl CanonicalFactor {
    pub fn word(&self) -> BraidWord {
        positive_permutation_braid(&self.0)
    }
}

/// `Δ^infimum · factors[0] · factors[1] ⋯` with every adjacent pair left-weighted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<CanonicalFactor>,
}

impl NormalForm {
    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    pub fn word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        if n >= 2 {
            let d = super::word::delta_braid(n).expect("n >= 2");
            for _ in 0..self.infimum.unsigned_abs() {
                if self.infimum > 0 {
                    letters.extend_from_slice(d.letters());
                } else {
                    letters.extend(d.letters().iter().rev().map(|l| -l));
                }
            }
        }
        for f in &self.factors {
            letters.extend_from_slice(positive_permutation_braid(&f.0).letters());
        }
        BraidWord::from_parts_unchecked(n, letters)
    }
}

pub(crate) mod simple {
    //! Permutation-level Garside operations on raw 0-based images.

    pub type Simple = Vec<u8>;

    pub fn identity(n: usize) -> Simple {
        (0..n as u8).collect()
    }

    pub fn delta(n: usize) -> Simple {
        (0..n as u8).rev().collect()
    }

    pub fn is_identity(a: &[u8]) -> bool {
        a.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn is_delta(a: &[u8]) -> bool {
        let n = a.len();
        a.iter().enumerate().all(|(i, &v)| n - 1 - i == v as usize)
    }

    pub fn inverse(a: &[u8]) -> Simple {
        let mut inv = vec![0u8; a.len()];
        for (i, &v) in a.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        inv
    }

    /// `a` then `b`.
    #[cfg(test)]
    pub fn then(a: &[u8], b: &[u8]) -> Simple {
        a.iter().map(|&v| b[v as usize]).collect()
    }

    /// Conjugation by `Δ`.
    pub fn tau(a: &[u8]) -> Simple {
        let n = a.len();
        (0..n).map(|i| (n - 1) as u8 - a[n - 1 - i]).collect()
    }

    /// Right complement `a⁻¹Δ`.
    pub fn right_complement(a: &[u8]) -> Simple {
        let n = a.len();
        let inv = inverse(a);
        inv.iter().map(|&v| (n - 1) as u8 - v).collect()
    }

    /// Left complement `Δa⁻¹`.
    #[cfg(test)]
    pub fn left_complement(a: &[u8]) -> Simple {
        let n = a.len();
        let inv = inverse(a);
        (0..n).map(|i| inv[n - 1 - i]).collect()
    }

    /// `σ_{i+1}` (0-based `i`) is a prefix of `b`.
    #[inline]
    pub fn starts_with(b: &[u8], i: usize) -> bool {
        b[i] > b[i + 1]
    }

    /// `σ_{i+1}` is a suffix of `a`; `ainv` is the inverse of `a`.
    #[inline]
    pub fn ends_with(ainv: &[u8], i: usize) -> bool {
        ainv[i] > ainv[i + 1]
    }

    /// Makes `(a, b)` left-weighted. Returns true if anything moved.
    pub fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
        let n = a.len();
        let mut ainv = inverse(a);
        let mut moved = false;
        loop {
            let mut found = None;
            for i in 0..n - 1 {
                if starts_with(b, i) && !ends_with(&ainv, i) {
                    found = Some(i);
                    break;
                }
            }
            let Some(i) = found else { break };
            // a ← a·σ, b ← σ⁻¹·b
            let (x, y) = (ainv[i] as usize, ainv[i + 1] as usize);
            a[x] = (i + 1) as u8;
            a[y] = i as u8;
            ainv.swap(i, i + 1);
            b.swap(i, i + 1);
            moved = true;
        }
        moved
    }

    /// Greatest common prefix of two simple elements.
    pub fn meet(a: &[u8], b: &[u8]) -> Simple {
        let n = a.len();
        let mut m = identity(n);
        let mut ra = a.to_vec();
        let mut rb = b.to_vec();
        loop {
            let mut found = None;
            for i in 0..n - 1 {
                if starts_with(&ra, i) && starts_with(&rb, i) {
                    found = Some(i);
                    break;
                }
            }
            let Some(i) = found else { break };
            let minv = inverse(&m);
            let (x, y) = (minv[i] as usize, minv[i + 1] as usize);
            m[x] = (i + 1) as u8;
            m[y] = i as u8;
            ra.swap(i, i + 1);
            rb.swap(i, i + 1);
        }
        m
    }
}

use simple::Simple;

/// Incremental left normal form builder.
#[derive(Clone, Debug)]
pub(crate) struct Lnf {
    n: usize,
    inf: i64,
    factors: Vec<Simple>,
}

impl Lnf {
    pub fn new(n: usize) -> Self {
        Lnf { n, inf: 0, factors: Vec::new() }
    }

    fn push_simple(&mut self, s: Simple) {
        if simple::is_identity(&s) {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            let moved = simple::left_weight(&mut left[j - 1], &mut right[0]);
            if !moved {
                break;
            }
            j -= 1;
        }
        while self.factors.first().is_some_and(|f| simple::is_delta(f)) {
            self.factors.remove(0);
            self.inf += 1;
        }
        while self.factors.last().is_some_and(|f| simple::is_identity(f)) {
            self.factors.pop();
        }
    }

    pub fn push_letter(&mut self, l: i32) {
        let n = self.n;
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            let mut s = simple::identity(n);
            s.swap(i, i + 1);
            self.push_simple(s);
        } else {
            for f in self.factors.iter_mut() {
                *f = simple::tau(f);
            }
            self.inf -= 1;
            // Δσ_i⁻¹ as a permutation: Δ followed by the transposition
            let mut s = simple::delta(n);
            for v in s.iter_mut() {
                if *v as usize == i {
                    *v = (i + 1) as u8;
                } else if *v as usize == i + 1 {
                    *v = i as u8;
                }
            }
            self.push_simple(s);
        }
    }

    pub fn finish(self) -> NormalForm {
        NormalForm {
            strands: self.n,
            infimum: self.inf,
            factors: self.factors.into_iter().map(|f| CanonicalFactor(Permutation::from_zero_based(f))).collect(),
        }
    }
}

pub fn left_normal_form(w: &BraidWord) -> NormalForm {
    let mut lnf = Lnf::new(w.strands());
    for &l in w.letters() {
        lnf.push_letter(l);
    }
    lnf.finish()
}

pub fn words_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch { left: u.strands(), right: v.strands() });
    }
    Ok(left_normal_form(&u.compose(&v.inverse())?).is_identity())
}

/// Normal form of a product of normal forms, used by the conjugacy search
/// to avoid re-expanding long words.
pub(crate) fn nf_from_parts(n: usize, inf: i64, factors: &[Simple]) -> NormalForm {
    let mut lnf = Lnf::new(n);
    lnf.inf = inf;
    for f in factors {
        lnf.push_simple(f.clone());
    }
    lnf.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn braid_relation_and_identity() {
        assert!(words_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(!words_equal(&w(3, &[1]), &w(3, &[2])).unwrap());
        let nf = left_normal_form(&w(2, &[1, -1]));
        assert_eq!(nf.infimum, 0);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn delta_is_one_factor() {
        let nf = left_normal_form(&w(3, &[1, 2, 1]));
        assert_eq!(nf.infimum, 1);
        assert!(nf.factors.is_empty());
        let nf = left_normal_form(&w(3, &[-1, -2, -1]));
        assert_eq!(nf.infimum, -1);
    }

    #[test]
    fn normal_form_word_round_trip() {
        let u = w(4, &[1, -2, 3, 3, -1, 2, -3, 1]);
        let nf = left_normal_form(&u);
        assert!(words_equal(&nf.word(), &u).unwrap());
        assert_eq!(left_normal_form(&nf.word()), nf);
    }

    #[test]
    fn complements() {
        let a: Vec<u8> = vec![1, 0, 2];
        let d = simple::delta(3);
        assert_eq!(simple::then(&a, &simple::right_complement(&a)), d);
        assert_eq!(simple::then(&simple::left_complement(&a), &a), d);
        assert_eq!(simple::meet(&a, &d), a);
        assert_eq!(simple::meet(&a, &[0, 2, 1]), simple::identity(3));
    }
}
