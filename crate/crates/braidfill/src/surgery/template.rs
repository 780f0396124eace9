//! Word-level twists on a fixed string that clasps a ribbon.
//!
//! The twisted string sits in position 1. Combing it out writes the braid as
//! letters on the other strands interleaved with clasps `σ1^{±2}`; a braid
//! matches the `-t` template when some cyclic rotation of that combed word is
//! `Y·C` with `Y` avoiding the string and `C` the clasp around a width-`m`
//! ribbon. The twisted braid is then `Y↑^{tm} · K · C` where `K` winds the
//! ribbon `t` more times around the axis.

use crate::braid::{words_equal, BraidWord};
use crate::error::Result;
use crate::families::{block_cross, ribbon_clasp};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Letter(i32),
    /// `σ1^{2e}`
    Clasp(i32),
}

/// `σ_j⁻¹…σ2⁻¹ σ1^{2e} σ2…σ_j`: the fixed string loops around the strand in
/// position `j + 1`.
fn loop_tokens(j: i32, e: i32, out: &mut Vec<Tok>) {
    out.extend((2..=j).rev().map(|x| Tok::Letter(-x)));
    out.push(Tok::Clasp(e));
    out.extend((2..=j).map(Tok::Letter));
}

/// Combs the strand in position 1 out of `w`. `None` unless that strand
/// starts and ends in position 1.
pub(crate) fn comb(w: &BraidWord) -> Option<Vec<Tok>> {
    let mut q = 1i32;
    let mut out = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let (i, e) = (l.abs(), l.signum());
        if i > q {
            out.push(Tok::Letter(l));
        } else if i <= q - 2 {
            out.push(Tok::Letter(e * (i + 1)));
        } else if i == q {
            if e < 0 {
                loop_tokens(q, -1, &mut out);
            }
            q += 1;
        } else {
            if e > 0 {
                loop_tokens(q - 1, 1, &mut out);
            }
            q -= 1;
        }
    }
    (q == 1).then_some(out)
}

pub(crate) fn tokens_word(n: usize, toks: &[Tok]) -> BraidWord {
    let mut letters = Vec::with_capacity(toks.len());
    for t in toks {
        match *t {
            Tok::Letter(l) => letters.push(l),
            Tok::Clasp(e) => letters.extend([e, e]),
        }
    }
    BraidWord::from_parts_unchecked(n, letters)
}

fn commute(a: Tok, b: Tok) -> bool {
    match (a, b) {
        (Tok::Clasp(_), Tok::Clasp(_)) => true,
        (Tok::Clasp(_), Tok::Letter(x)) | (Tok::Letter(x), Tok::Clasp(_)) => x.abs() >= 3,
        (Tok::Letter(x), Tok::Letter(y)) => (x.abs() - y.abs()).abs() >= 2,
    }
}

fn cancels(a: Tok, b: Tok) -> bool {
    match (a, b) {
        (Tok::Clasp(x), Tok::Clasp(y)) | (Tok::Letter(x), Tok::Letter(y)) => x == -y,
        _ => false,
    }
}

/// Cancels inverse pairs that can be brought together by commuting moves.
pub(crate) fn reduce(mut toks: Vec<Tok>) -> Vec<Tok> {
    'outer: loop {
        for i in 0..toks.len() {
            for j in i + 1..toks.len() {
                if cancels(toks[i], toks[j]) {
                    toks.remove(j);
                    toks.remove(i);
                    continue 'outer;
                }
                if !commute(toks[i], toks[j]) {
                    break;
                }
            }
        }
        return toks;
    }
}

/// `Some(v)` when `y` lies in the subgroup that leaves strands `lo..=hi`
/// alone, `v` being a word for it in the generators of that subgroup.
pub(crate) fn avoiding(y: &BraidWord, lo: usize, hi: usize) -> Result<Option<BraidWord>> {
    let p = y.permutation();
    if (lo..=hi).any(|s| p.image(s) != s) {
        return Ok(None);
    }
    let starts: Vec<usize> = (lo..=hi).collect();
    let erased = y.erase_strands(&starts)?;
    let width = (hi - lo + 1) as i32;
    let mut letters = Vec::with_capacity(erased.len());
    for &l in erased.letters() {
        let a = l.abs();
        if a as usize + 1 == lo {
            return Ok(None);
        }
        let b = if (a as usize) < lo { a } else { a + width };
        letters.push(l.signum() * b);
    }
    let v = BraidWord::new(y.strands(), letters)?;
    Ok(words_equal(y, &v)?.then_some(v))
}

/// Winds a width-`m` ribbon, sitting just right of the fixed string,
/// `t` extra times around the axis.
pub(crate) fn cable(n: usize, m: usize, t: usize) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for i in (2..=t + 1).rev() {
        letters.extend_from_slice(block_cross(n, 2 + (i - 2) * m, m, m)?.letters());
    }
    BraidWord::new(n, letters)
}

/// A template match: the twisted braid and the conjugator `c` with
/// `c⁻¹·input·c` the braid the template was read from.
#[derive(Clone, Debug)]
pub struct TwistMatch {
    pub braid: BraidWord,
    pub conjugator: BraidWord,
}

fn rotation_order(toks: &[Tok]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..toks.len().max(1)).collect();
    order.sort_by_key(|&r| toks[..r.min(toks.len())].iter().filter(|t| matches!(t, Tok::Clasp(_))).count());
    order
}

fn rotate(toks: &[Tok], r: usize) -> Vec<Tok> {
    let mut v = toks[r..].to_vec();
    v.extend_from_slice(&toks[..r]);
    v
}

/// The fixed string's loop as a free word in `L_j` (`±j`, `j ≥ 2`): the loop
/// around the strand in position `j`, read at the top of the braid. The braid
/// is `loop · P` with `P` the returned letters on the other strands.
fn loop_element(toks: &[Tok]) -> (Vec<i32>, Vec<i32>) {
    let mut prefix = Vec::new();
    let mut f = Vec::new();
    for t in toks {
        match *t {
            Tok::Letter(l) => prefix.push(l),
            Tok::Clasp(e) => {
                let mut x = vec![2 * e.signum()];
                for &p in prefix.iter().rev() {
                    x = act(p, &x);
                }
                f.extend(x);
                f = free_reduce(f);
            }
        }
    }
    (prefix, f)
}

fn free_reduce(w: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// `u ↦ g·u·g⁻¹` for a letter `g = σ_i^{±1}`, `i ≥ 2`.
fn act(g: i32, w: &[i32]) -> Vec<i32> {
    let i = g.abs();
    let mut out = Vec::with_capacity(w.len() + 4);
    for &x in w {
        let (j, e) = (x.abs(), x.signum());
        let image: Vec<i32> = match (g > 0, j - i) {
            (true, 0) => vec![-i, i + 1, i],
            (true, 1) => vec![i],
            (false, 0) => vec![i + 1],
            (false, 1) => vec![i + 1, i, -(i + 1)],
            _ => vec![j],
        };
        if e > 0 {
            out.extend(image);
        } else {
            out.extend(image.iter().rev().map(|y| -y));
        }
    }
    free_reduce(out)
}

/// Looks for `h` on the other strands with `h⁻¹·w·h = c·Y`, `Y` avoiding the
/// string: a best-first search over the string's loop, shortest loops first,
/// visiting at most `budget` loops.
pub(crate) fn untangle(w: &BraidWord, c: &BraidWord, budget: usize) -> Option<BraidWord> {
    use std::cmp::Reverse;
    use std::collections::{BinaryHeap, HashMap};
    let n = w.strands() as i32;
    let (_, target) = loop_element(&reduce(comb(c)?));
    let (_, start) = loop_element(&reduce(comb(w)?));
    let gens: Vec<i32> = (2..n).flat_map(|i| [i, -i]).collect();
    // loop → (parent, letter)
    let mut came: HashMap<Vec<i32>, (Vec<i32>, i32)> = HashMap::new();
    let mut heap = BinaryHeap::new();
    came.insert(start.clone(), (Vec::new(), 0));
    heap.push(Reverse((start.len(), start)));
    while let Some(Reverse((_, f))) = heap.pop() {
        if f == target {
            let mut h = Vec::new();
            let mut cur = f;
            while let Some((parent, g)) = came.get(&cur) {
                if *g == 0 {
                    break;
                }
                h.push(*g);
                cur = parent.clone();
            }
            h.reverse();
            return BraidWord::new(w.strands(), h).ok();
        }
        if came.len() > budget {
            return None;
        }
        for &g in &gens {
            let u = act(-g, &f);
            if !came.contains_key(&u) {
                came.insert(u.clone(), (f.clone(), g));
                heap.push(Reverse((u.len(), u)));
            }
        }
    }
    None
}

const UNTANGLE_BUDGET: usize = 200_000;

/// `-t` twist (`t > 0`) on the fixed string in position 1 of `w`, which must
/// clasp a width-`m` ribbon once. Falls back to [`untangle`] when no
/// rotation of the combed word fits.
pub(crate) fn minus_twist(w: &BraidWord, t: usize, m: usize) -> Result<Option<TwistMatch>> {
    if let Some(hit) = minus_twist_rotating(w, t, m)? {
        return Ok(Some(hit));
    }
    let Some(h) = untangle(w, &ribbon_clasp(w.strands(), m)?, UNTANGLE_BUDGET) else { return Ok(None) };
    // h⁻¹wh = C·Y, so one more conjugation by C gives Y·C
    let h = h.compose(&ribbon_clasp(w.strands(), m)?)?;
    let Some(hit) = minus_twist_rotating(&w.conjugate(&h)?, t, m)? else { return Ok(None) };
    let conjugator = h.compose(&hit.conjugator)?;
    Ok(Some(TwistMatch { braid: hit.braid, conjugator }))
}

fn minus_twist_rotating(w: &BraidWord, t: usize, m: usize) -> Result<Option<TwistMatch>> {
    let n = w.strands();
    let Some(toks) = comb(w) else { return Ok(None) };
    let toks = reduce(toks);
    let clasp = ribbon_clasp(n, m)?;
    let grown = n + t * m;
    for r in rotation_order(&toks) {
        let prefix = &toks[..r.min(toks.len())];
        let rotated = tokens_word(n, &rotate(&toks, r.min(toks.len())));
        let Some(y) = avoiding(&rotated.compose(&clasp.inverse())?, 1, 1)? else { continue };
        let twisted = y.shifted(t * m, grown)?.compose(&cable(grown, m, t)?)?.compose(&ribbon_clasp(grown, m)?)?;
        if prefix.iter().all(|t| matches!(t, Tok::Letter(_))) {
            // undo the rotation inside the bigger braid so the presentation is kept
            let p = tokens_word(n, prefix).shifted(t * m, grown)?;
            let braid = p.compose(&twisted)?.compose(&p.inverse())?;
            return Ok(Some(TwistMatch { braid, conjugator: BraidWord::identity(n) }));
        }
        return Ok(Some(TwistMatch { braid: twisted, conjugator: tokens_word(n, prefix) }));
    }
    Ok(None)
}

fn words_over(gens: &[i32], depth: usize) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &layer {
            for &g in gens {
                if w.last() == Some(&-g) {
                    continue;
                }
                let mut v: Vec<i32> = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `+t` twist on the fixed string in position 1: undoes [`minus_twist`].
/// Up to `depth` extra letters on the strands right of the ribbon may be
/// conjugated in to reach the template.
pub(crate) fn plus_twist(w: &BraidWord, t: usize, m: usize, depth: usize) -> Result<Option<TwistMatch>> {
    let n = w.strands();
    if n <= t * m + 1 {
        return Ok(None);
    }
    let Some(toks) = comb(w) else { return Ok(None) };
    let toks = reduce(toks);
    let unwind = cable(n, m, t)?.compose(&ribbon_clasp(n, m)?)?.inverse();
    let gens: Vec<i32> = (3..n as i32).flat_map(|i| [i, -i]).collect();
    let order = rotation_order(&toks);
    for g in words_over(&gens, depth) {
        let g = BraidWord::new(n, g)?;
        for &r in &order {
            let r = r.min(toks.len());
            let rotated = tokens_word(n, &rotate(&toks, r)).conjugate(&g)?;
            let Some(z) = avoiding(&rotated.compose(&unwind)?, 1, t * m + 1)? else { continue };
            let shrunk = n - t * m;
            let letters: Vec<i32> = z.letters().iter().map(|&l| l.signum() * (l.abs() - (t * m) as i32)).collect();
            let braid = BraidWord::new(shrunk, letters)?.compose(&ribbon_clasp(shrunk, m)?)?;
            let conjugator = tokens_word(n, &toks[..r]).compose(&g)?;
            return Ok(Some(TwistMatch { braid, conjugator }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{beta, gamma};

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn combing_keeps_the_braid() {
        for u in [w(4, &[1, 2, -1, -3, 2, 2, -2, 1, 3, -1, -2, -1]), gamma(1, 2).unwrap().word, w(3, &[1, 1, 2, -1, -1, -2])] {
            let toks = comb(&u).unwrap();
            assert!(words_equal(&tokens_word(u.strands(), &toks), &u).unwrap());
            assert!(words_equal(&tokens_word(u.strands(), &reduce(toks)), &u).unwrap());
        }
        assert!(comb(&w(3, &[1])).is_none());
    }

    #[test]
    fn avoiding_finds_parabolic_words() {
        let v = avoiding(&w(5, &[3, 4, -3]), 1, 2).unwrap().unwrap();
        assert!(v.letters().iter().all(|l| l.abs() >= 3));
        assert!(avoiding(&w(5, &[3, 4, -3, 1]), 2, 2).unwrap().is_none());
        assert!(avoiding(&w(4, &[1, 1]), 1, 1).unwrap().is_none());
        assert!(avoiding(&w(4, &[2, 3, -2]), 1, 1).unwrap().is_some());
    }

    #[test]
    fn gamma_twists_to_beta() {
        for (l, m) in [(0u32, 1u32), (1, 2), (1, 3)] {
            for k in 1..=3usize {
                let g = gamma(l, m).unwrap().word;
                let hit = minus_twist(&g, k, m as usize).unwrap().unwrap();
                let erased = hit.braid.erase_strand(1).unwrap();
                let target = beta(m, (k as u32 + 3) * m + l).unwrap().word;
                assert!(words_equal(&erased, &target).unwrap(), "{l}/{m} k={k}");
            }
        }
    }

    #[test]
    fn loop_element_recombs_to_the_braid() {
        let u = w(5, &[2, 1, 1, -3, 2, -1, -1, 4, 3, 1, 1, -2]);
        let toks = comb(&u).unwrap();
        let (prefix, f) = loop_element(&toks);
        let mut letters = Vec::new();
        for x in f {
            let j = x.abs();
            let mut l: Vec<i32> = (2..j).rev().map(|y| -y).collect();
            l.extend([1, 1]);
            l.extend(2..j);
            if x < 0 {
                l = l.iter().rev().map(|y| -y).collect();
            }
            letters.extend(l);
        }
        letters.extend(prefix);
        assert!(words_equal(&w(5, &letters), &u).unwrap());
    }

    #[test]
    fn untangle_finds_hidden_clasp() {
        let c = ribbon_clasp(6, 2).unwrap();
        let h = w(6, &[3, -4, 2, 5, 3, -2]);
        let hidden = w(6, &[4, -5]).compose(&c).unwrap().conjugate(&h.inverse()).unwrap();
        let found = untangle(&hidden, &c, 10_000).unwrap();
        let y = c.inverse().compose(&hidden.conjugate(&found).unwrap()).unwrap();
        assert!(avoiding(&y, 1, 1).unwrap().is_some());
    }

    #[test]
    fn plus_undoes_minus() {
        let g = gamma(1, 2).unwrap().word;
        for t in 1..=3 {
            let grown = minus_twist(&g, t, 2).unwrap().unwrap().braid;
            let back = plus_twist(&grown, t, 2, 0).unwrap().unwrap();
            let again = back.braid.conjugate(&BraidWord::identity(g.strands())).unwrap();
            assert_eq!(again.strands(), g.strands());
            assert!(words_equal(&back.braid, &g).unwrap());
        }
    }
}
