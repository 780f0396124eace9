//! Bounded conjugacy search by cyclic sliding.
//!
//! Every element is slid into its sliding circuit; the search walks the graph
//! of circuits joined by conjugation with a single generator (or `Δ`), from
//! both ends at once. A hit produces a conjugator that is re-checked with the
//! word problem before it is returned.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::garside::{left_normal_form, nf_from_parts, simple, words_equal, NormalForm};
use super::word::{positive_permutation_braid, BraidWord};
use super::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Generator steps explored from each side.
    pub max_depth: usize,
    /// Sliding circuits visited per side before giving up.
    pub max_nodes: usize,
    /// Slides allowed while looking for a circuit.
    pub max_slides: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_depth: 4, max_nodes: 20_000, max_slides: 2_000 }
    }
}

/// `conjugate(source, conjugator) == target` in the group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyCertificate {
    pub conjugator: BraidWord,
    pub source: BraidWord,
    pub target: BraidWord,
}

impl ConjugacyCertificate {
    pub fn verify(&self) -> bool {
        match self.source.conjugate(&self.conjugator) {
            Ok(c) => words_equal(&c, &self.target).unwrap_or(false),
            Err(_) => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Elem {
    inf: i64,
    f: Vec<simple::Simple>,
}

impl Elem {
    fn from_nf(nf: &NormalForm) -> Self {
        Elem { inf: nf.infimum, f: nf.factors.iter().map(|c| c.0.raw().to_vec()).collect() }
    }

    fn tau(&self) -> Self {
        Elem { inf: self.inf, f: self.f.iter().map(|s| simple::tau(s)).collect() }
    }

    /// `s⁻¹ · self · s` for a simple `s`.
    fn conj_simple(&self, n: usize, s: &[u8]) -> Self {
        // s⁻¹ = Δ⁻¹ τ(∂s), and moving Δ^p past a factor applies τ^p
        let mut first = simple::right_complement(s);
        if (self.inf + 1).rem_euclid(2) == 1 {
            first = simple::tau(&first);
        }
        let mut parts = Vec::with_capacity(self.f.len() + 2);
        parts.push(first);
        parts.extend(self.f.iter().cloned());
        parts.push(s.to_vec());
        Elem::from_nf(&nf_from_parts(n, self.inf - 1, &parts))
    }

    /// Preferred prefix `ι(x) ∧ ∂(φ(x))`, or `None` when `x` is a power of Δ.
    fn preferred_prefix(&self) -> Option<simple::Simple> {
        let first = self.f.first()?;
        let last = self.f.last()?;
        let init = if self.inf.rem_euclid(2) == 1 { simple::tau(first) } else { first.clone() };
        Some(simple::meet(&init, &simple::right_complement(last)))
    }
}

fn simple_word(s: &[u8]) -> Vec<i32> {
    positive_permutation_braid(&Permutation::from_zero_based(s.to_vec())).letters().to_vec()
}

/// A sliding circuit with conjugators from the element that entered it.
struct Circuit {
    key: Elem,
    /// conjugator (letters) taking the entering element to `key`
    to_key: Vec<i32>,
    members: Vec<(Elem, Vec<i32>)>,
}

fn slide_to_circuit(n: usize, x: Elem, max_slides: usize) -> Option<Circuit> {
    let mut seen: HashMap<Elem, usize> = HashMap::new();
    let mut trail: Vec<(Elem, Vec<i32>)> = Vec::new();
    let mut cur = x;
    let mut conj: Vec<i32> = Vec::new();
    for _ in 0..=max_slides {
        if let Some(&start) = seen.get(&cur) {
            let members: Vec<(Elem, Vec<i32>)> = trail[start..].to_vec();
            let (key, to_key) = members.iter().min_by(|a, b| a.0.cmp(&b.0)).map(|(e, c)| (e.clone(), c.clone())).expect("nonempty circuit");
            return Some(Circuit { key, to_key, members });
        }
        seen.insert(cur.clone(), trail.len());
        trail.push((cur.clone(), conj.clone()));
        match cur.preferred_prefix() {
            Some(p) if !simple::is_identity(&p) => {
                conj.extend(simple_word(&p));
                cur = cur.conj_simple(n, &p);
            }
            _ => {
                // fixed by sliding
                return Some(Circuit { key: cur.clone(), to_key: conj.clone(), members: vec![(cur, conj)] });
            }
        }
    }
    None
}

fn invert(letters: &[i32]) -> Vec<i32> {
    letters.iter().rev().map(|l| -l).collect()
}

struct Side {
    /// circuit key → conjugator from the side's origin to that key
    found: HashMap<Elem, Vec<i32>>,
    queue: VecDeque<(Elem, Vec<i32>, usize)>,
}

impl Side {
    fn start(n: usize, x: &BraidWord, budget: &SearchBudget) -> Option<Side> {
        let e = Elem::from_nf(&left_normal_form(x));
        let c = slide_to_circuit(n, e, budget.max_slides)?;
        let mut found = HashMap::new();
        found.insert(c.key.clone(), c.to_key.clone());
        let mut queue = VecDeque::new();
        queue.push_back((c.key, c.to_key, 0));
        Some(Side { found, queue })
    }
}

/// Searches for `c` with `c⁻¹ x c = y`. `Ok(None)` means the budget ran out;
/// it says nothing about whether the braids are conjugate.
pub fn conjugacy_search(x: &BraidWord, y: &BraidWord, budget: SearchBudget) -> Result<Option<ConjugacyCertificate>> {
    if x.strands() != y.strands() {
        return Err(Error::StrandMismatch { left: x.strands(), right: y.strands() });
    }
    let n = x.strands();
    let certify = |c: Vec<i32>| -> Option<ConjugacyCertificate> {
        let cert = ConjugacyCertificate { conjugator: BraidWord::from_parts_unchecked(n, c), source: x.clone(), target: y.clone() };
        cert.verify().then_some(cert)
    };
    if words_equal(x, y)? {
        return Ok(certify(Vec::new()));
    }
    if x.exponent_sum() != y.exponent_sum() || x.permutation().cycle_type() != y.permutation().cycle_type() {
        return Ok(None);
    }
    if n < 2 {
        return Ok(None);
    }
    let (Some(mut a), Some(mut b)) = (Side::start(n, x, &budget), Side::start(n, y, &budget)) else {
        return Ok(None);
    };
    let meet = |key: &Elem, ca: &[i32], other: &HashMap<Elem, Vec<i32>>, a_is_x: bool| -> Option<Vec<i32>> {
        let cb = other.get(key)?;
        let (cx, cy) = if a_is_x { (ca, cb.as_slice()) } else { (cb.as_slice(), ca) };
        let mut c = cx.to_vec();
        c.extend(invert(cy));
        Some(c)
    };
    for (key, c) in a.found.iter() {
        if let Some(cc) = meet(key, c, &b.found, true) {
            if let Some(cert) = certify(cc) {
                return Ok(Some(cert));
            }
        }
    }
    let delta = simple::delta(n);
    let atoms: Vec<simple::Simple> = (0..n - 1)
        .map(|i| {
            let mut s = simple::identity(n);
            s.swap(i, i + 1);
            s
        })
        .collect();
    let mut turn_x = true;
    loop {
        let (me, other) = if turn_x { (&mut a, &b) } else { (&mut b, &a) };
        let Some((key, conj, depth)) = me.queue.pop_front() else {
            // this side is exhausted; try the other one
            if b.queue.is_empty() && a.queue.is_empty() {
                return Ok(None);
            }
            turn_x = !turn_x;
            continue;
        };
        if depth >= budget.max_depth {
            if a.queue.is_empty() && b.queue.is_empty() {
                return Ok(None);
            }
            turn_x = !turn_x;
            continue;
        }
        let Some(circuit) = slide_to_circuit(n, key.clone(), budget.max_slides) else {
            continue;
        };
        let mut next = Vec::new();
        for (member, to_member) in &circuit.members {
            let mut base = conj.clone();
            base.extend(invert(&circuit.to_key));
            base.extend(to_member.iter().copied());
            for (i, s) in atoms.iter().enumerate() {
                let l = i as i32 + 1;
                next.push((member.conj_simple(n, s), [base.clone(), vec![l]].concat()));
                let t = simple::right_complement(s);
                next.push((member.conj_simple(n, &t).tau(), [base.clone(), vec![-l]].concat()));
            }
            next.push((member.conj_simple(n, &delta), [base.clone(), simple_word(&delta)].concat()));
        }
        for (e, c) in next {
            let Some(circ) = slide_to_circuit(n, e, budget.max_slides) else { continue };
            if me.found.contains_key(&circ.key) {
                continue;
            }
            let mut full = c;
            full.extend(circ.to_key.iter().copied());
            if let Some(cc) = meet(&circ.key, &full, &other.found, turn_x) {
                if let Some(cert) = certify(cc) {
                    return Ok(Some(cert));
                }
            }
            me.found.insert(circ.key.clone(), full.clone());
            me.queue.push_back((circ.key, full, depth + 1));
            if me.found.len() > budget.max_nodes {
                return Ok(None);
            }
        }
        turn_x = !turn_x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn same_word_has_empty_conjugator() {
        let u = w(3, &[1, -2, 1]);
        let c = conjugacy_search(&u, &u, SearchBudget::default()).unwrap().unwrap();
        assert!(c.conjugator.is_empty());
    }

    #[test]
    fn generators_are_conjugate() {
        let c = conjugacy_search(&w(3, &[1]), &w(3, &[2]), SearchBudget::default()).unwrap().unwrap();
        assert!(c.verify());
    }

    #[test]
    fn sliding_preserves_element_class() {
        let u = w(4, &[1, 2, -3, 2, 2, 1, -1, 3, 3]);
        let e = Elem::from_nf(&left_normal_form(&u));
        let circ = slide_to_circuit(4, e, 1000).unwrap();
        let conj = BraidWord::from_parts_unchecked(4, circ.to_key.clone());
        let key_word = NormalForm {
            strands: 4,
            infimum: circ.key.inf,
            factors: circ.key.f.iter().map(|s| super::super::CanonicalFactor(Permutation::from_zero_based(s.clone()))).collect(),
        }
        .word();
        assert!(words_equal(&u.conjugate(&conj).unwrap(), &key_word).unwrap());
    }

    #[test]
    fn rejects_different_exponent_sums() {
        assert!(conjugacy_search(&w(3, &[1]), &w(3, &[1, 1]), SearchBudget::default()).unwrap().is_none());
    }
}
