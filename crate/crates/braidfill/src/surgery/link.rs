use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::rational::ExtendedRational;
use super::template::{minus_twist, plus_twist};
use crate::braid::{delta_braid, full_twist, BraidWord};
use crate::error::{Error, Result};
use crate::families::block_move;

/// Name under which the braid axis is addressed.
pub const AXIS: &str = "axis";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    /// Starting positions of the component's strands.
    pub strands: Vec<usize>,
    /// `None` leaves the component as a cusp.
    pub filling: Option<ExtendedRational>,
}

pub type Coefficients = BTreeMap<String, Option<ExtendedRational>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub operation: String,
    /// Set when the step conjugated the braid: `new = c⁻¹·old·c`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<BraidWord>,
    /// For twists: the braid read off the template is conjugated by this to
    /// return to the input's frame.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restore: Option<BraidWord>,
    pub before: Coefficients,
    pub after: Coefficients,
}

/// The closure of a braid, optionally with its axis, with surgery
/// coefficients on some of the components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeredLink {
    pub braid: BraidWord,
    pub axis: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis_filling: Option<ExtendedRational>,
    pub components: Vec<Component>,
    #[serde(default)]
    pub ledger: Vec<LedgerEntry>,
}

/// `(n+1)`-strand braid whose closure is the closure of `braid` together with
/// its axis, the axis being the last strand.
pub fn axis_augmented_braid(braid: &BraidWord) -> BraidWord {
    let n = braid.strands() as i32;
    let mut letters = braid.letters().to_vec();
    letters.extend((1..=n).rev());
    letters.extend(1..=n);
    BraidWord::new(braid.strands() + 1, letters).expect("indices below n + 1")
}

impl SurgeredLink {
    /// Names the closure components; each strand set must be a union of
    /// cycles of the braid permutation, and together they cover every strand.
    pub fn new(braid: BraidWord, axis: bool, components: Vec<(String, Vec<usize>)>) -> Result<Self> {
        let link = SurgeredLink {
            braid,
            axis,
            axis_filling: None,
            components: components
                .into_iter()
                .map(|(name, mut strands)| {
                    strands.sort_unstable();
                    Component { name, strands, filling: None }
                })
                .collect(),
            ledger: Vec::new(),
        };
        link.validate()?;
        Ok(link)
    }

    /// One component per closure cycle, named `c1, c2, …` in order of the
    /// smallest strand.
    pub fn from_cycles(braid: BraidWord, axis: bool) -> Self {
        let comps = braid.cycle_components().into_iter().enumerate().map(|(i, c)| (format!("c{}", i + 1), c)).collect();
        Self::new(braid, axis, comps).expect("cycles partition the strands")
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.braid.strands();
        let perm = self.braid.permutation();
        let mut seen = BTreeSet::new();
        let mut names = BTreeSet::new();
        for c in &self.components {
            if c.name == AXIS || !names.insert(c.name.as_str()) {
                return Err(Error::InvalidParameter(format!("duplicate or reserved name {:?}", c.name)));
            }
            for &s in &c.strands {
                if s == 0 || s > n || !seen.insert(s) {
                    return Err(Error::BadComponents);
                }
                if !c.strands.contains(&perm.image(s)) {
                    return Err(Error::BadComponents);
                }
            }
        }
        if seen.len() != n {
            return Err(Error::BadComponents);
        }
        if self.axis_filling.is_some() && !self.axis {
            return Err(Error::NoAxis);
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let link: SurgeredLink = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        link.validate()?;
        Ok(link)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn component(&self, name: &str) -> Result<&Component> {
        self.components.iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownComponent(name.to_string()))
    }

    fn component_mut(&mut self, name: &str) -> Result<&mut Component> {
        self.components.iter_mut().find(|c| c.name == name).ok_or_else(|| Error::UnknownComponent(name.to_string()))
    }

    pub fn with_filling(mut self, name: &str, r: ExtendedRational) -> Result<Self> {
        if name == AXIS {
            if !self.axis {
                return Err(Error::NoAxis);
            }
            self.axis_filling = Some(r);
        } else {
            self.component_mut(name)?.filling = Some(r);
        }
        Ok(self)
    }

    pub fn filling(&self, name: &str) -> Result<Option<ExtendedRational>> {
        if name == AXIS {
            return if self.axis { Ok(self.axis_filling) } else { Err(Error::NoAxis) };
        }
        Ok(self.component(name)?.filling)
    }

    pub fn coefficients(&self) -> Coefficients {
        let mut out: Coefficients = self.components.iter().map(|c| (c.name.clone(), c.filling)).collect();
        if self.axis {
            out.insert(AXIS.to_string(), self.axis_filling);
        }
        out
    }

    pub fn linking_number(&self, a: &str, b: &str) -> Result<i64> {
        if a == b {
            return Err(Error::InvalidParameter(format!("{a:?} linked with itself")));
        }
        if a == AXIS || b == AXIS {
            if !self.axis {
                return Err(Error::NoAxis);
            }
            let other = if a == AXIS { b } else { a };
            return Ok(self.component(other)?.strands.len() as i64);
        }
        let (ca, cb) = (&self.component(a)?.strands, &self.component(b)?.strands);
        let mut twice = 0i64;
        for (x, y, sign) in self.braid.crossings() {
            if (ca.contains(&x) && cb.contains(&y)) || (ca.contains(&y) && cb.contains(&x)) {
                twice += sign as i64;
            }
        }
        Ok(twice / 2)
    }

    fn push_ledger(&mut self, operation: String, conjugator: Option<BraidWord>, before: Coefficients) {
        let after = self.coefficients();
        self.ledger.push(LedgerEntry { operation, conjugator, restore: None, before, after });
    }

    /// Relabels every component through `s ↦ map(s)` and re-closes each
    /// under the new braid's cycles.
    fn remap(&mut self, map: impl Fn(usize) -> Option<usize>) -> Result<()> {
        let cycles = self.braid.cycle_components();
        let mut taken = BTreeSet::new();
        for c in self.components.iter_mut() {
            let rep = c.strands.iter().find_map(|&s| map(s)).ok_or(Error::BadComponents)?;
            let cyc = cycles.iter().find(|cy| cy.contains(&rep)).ok_or(Error::BadComponents)?;
            if !taken.insert(cyc[0]) {
                return Err(Error::BadComponents);
            }
            let mut s = cyc.clone();
            s.sort_unstable();
            c.strands = s;
        }
        if taken.len() != cycles.len() {
            return Err(Error::BadComponents);
        }
        Ok(())
    }

    /// Replaces the braid by `c⁻¹·braid·c`.
    pub fn conjugate(&self, c: &BraidWord) -> Result<Self> {
        let mut out = self.clone();
        let before = out.coefficients();
        out.braid = self.braid.conjugate(c)?;
        let p = c.permutation();
        out.remap(|s| Some(p.image(s)))?;
        out.push_ledger(format!("conjugate by {}", c), Some(c.clone()), before);
        Ok(out)
    }

    /// A `t` twist on the axis: the braid becomes `braid·θ^{−t}`.
    pub fn twist_axis(&self, t: i64) -> Result<Self> {
        if !self.axis {
            return Err(Error::NoAxis);
        }
        let mut out = self.clone();
        let before = out.coefficients();
        if self.braid.strands() >= 2 {
            out.braid = self.braid.compose(&full_twist(self.braid.strands())?.power(-t))?;
        }
        out.axis_filling = self.axis_filling.map(|r| r.twist_update(t));
        for c in out.components.iter_mut() {
            let lk = c.strands.len() as i64;
            c.filling = c.filling.map(|r| r.offset_update(t, lk));
        }
        out.push_ledger(format!("{t:+} twist on the axis"), None, before);
        Ok(out)
    }

    /// A `t` twist on a fixed string that clasps a ribbon once.
    ///
    /// The string is slid to one end of the braid (over or under the strands
    /// it passes), the picture is flipped if it went to the right, and the
    /// braid must then match the twist template with the string in position 1.
    /// For `t > 0` the strands lying between the string and the ribbon may
    /// first be slid across the ribbon, and up to `depth` extra letters may be
    /// conjugated in. Afterwards the string is slid back, so the result is
    /// drawn in the frame of the input.
    pub fn twist_fixed(&self, name: &str, t: i64, depth: usize) -> Result<Self> {
        let comp = self.component(name)?;
        if comp.strands.len() != 1 {
            return Err(Error::NotFixedStrand(name.to_string()));
        }
        if t == 0 {
            return Ok(self.clone());
        }
        let mut m = 0i64;
        let mut links = Vec::new();
        for c in &self.components {
            if c.name != name {
                let lk = self.linking_number(name, &c.name)?;
                m += lk;
                links.push((c.name.clone(), lk));
            }
        }
        if m < 1 {
            return Err(Error::TemplateMismatch(format!("{name} does not clasp a ribbon positively")));
        }
        let m = m as usize;
        let p = comp.strands[0];
        let n = self.braid.strands();
        let shift = t.unsigned_abs() as usize * m;
        let before = self.coefficients();

        let mut found = None;
        'search: for (back, sign) in [(false, 1), (false, -1), (true, 1), (true, -1)] {
            let gaps = if t > 0 { 0..=n.saturating_sub(shift + 2) } else { 0..=0 };
            for gap in gaps {
                for gap_sign in if gap == 0 { &[1][..] } else { &[1, -1][..] } {
                    let frame = Frame { back, sign, gap, gap_sign: *gap_sign };
                    let entry = frame.entry(n, p, shift)?;
                    let moved = self.braid.conjugate(&entry)?;
                    let steps = t.unsigned_abs() as usize;
                    let hit = if t < 0 { minus_twist(&moved, steps, m)? } else { plus_twist(&moved, steps, m, depth)? };
                    if let Some(hit) = hit {
                        found = Some((frame, entry.compose(&hit.conjugator)?, hit.braid));
                        break 'search;
                    }
                }
            }
        }
        let (frame, entry, twisted) = found.ok_or_else(|| Error::TemplateMismatch(format!("{t:+} twist on {name}")))?;
        let new_n = twisted.strands();
        let into = entry.permutation();
        let template = |s: usize| -> Option<usize> {
            match s {
                1 => Some(1),
                _ if t < 0 => Some(s + shift),
                _ if s > shift + 1 => Some(s - shift),
                _ => None,
            }
        };
        let survivors_left = (1..p).filter(|&s| template(into.image(s)).is_some()).count();
        let exit = frame.exit(new_n, p, survivors_left, t, shift)?;
        let out_of = exit.permutation();

        let mut work = self.clone();
        work.braid = twisted.conjugate(&exit)?;
        work.remap(|s| template(into.image(s)).map(|f| out_of.image(f)))?;
        for c in work.components.iter_mut() {
            if c.name == name {
                c.filling = c.filling.map(|r| r.twist_update(t));
            } else {
                let lk = links.iter().find(|(n, _)| n == &c.name).map(|x| x.1).unwrap_or(0);
                c.filling = c.filling.map(|r| r.offset_update(t, lk));
            }
        }
        work.axis_filling = work.axis_filling.map(|r| r.offset_update(t, 1));
        let before_len = work.ledger.len();
        work.push_ledger(format!("{t:+} twist on {name}"), (!entry.is_empty()).then_some(entry), before);
        work.ledger[before_len].restore = (!exit.is_empty()).then_some(exit);
        Ok(work)
    }

    /// Fills a component with coefficient `∞`, i.e. deletes it.
    pub fn erase_component(&self, name: &str) -> Result<Self> {
        let comp = self.component(name)?;
        if comp.filling != Some(ExtendedRational::INFINITY) {
            let coefficient = comp.filling.map_or("none".to_string(), |r| r.to_string());
            return Err(Error::NotErasable { name: name.to_string(), coefficient });
        }
        let gone = comp.strands.clone();
        let mut out = self.clone();
        let before = out.coefficients();
        out.braid = self.braid.erase_strands(&gone)?;
        out.components.retain(|c| c.name != name);
        for c in out.components.iter_mut() {
            for s in c.strands.iter_mut() {
                *s -= gone.iter().filter(|&&g| g < *s).count();
            }
        }
        out.push_ledger(format!("erase {name}"), None, before);
        out.validate()?;
        Ok(out)
    }
}

/// How a fixed string is brought into template position and back.
#[derive(Clone, Copy, Debug)]
struct Frame {
    /// slid to the right end and the picture flipped
    back: bool,
    sign: i32,
    /// strands between the string and the ribbon, slid across the ribbon
    gap: usize,
    gap_sign: i32,
}

impl Frame {
    fn entry(&self, n: usize, p: usize, shift: usize) -> Result<BraidWord> {
        let bring = if self.back {
            block_move(n, p, 1, n - p, self.sign)?.compose(&delta_braid(n)?)?
        } else {
            block_move(n, 1, p - 1, 1, self.sign)?
        };
        bring.compose(&block_move(n, 2, self.gap, shift + 1, self.gap_sign)?)
    }

    /// Conjugator from the template picture on `n` strands back to the
    /// input's frame; `left` strands of the input survive left of the string.
    fn exit(&self, n: usize, p: usize, left: usize, t: i64, shift: usize) -> Result<BraidWord> {
        let gap = block_move(n, 2, self.gap, 1, self.gap_sign)?.inverse();
        let carried = if t < 0 { shift + 1 } else { 1 };
        let bring = if self.back {
            let at = if t < 0 { p } else { left + 1 };
            block_move(n, at, carried, n - at + 1 - carried, self.sign)?.inverse()
        } else {
            let before = if t < 0 { p - 1 } else { left };
            block_move(n, 1, before, carried, self.sign)?.inverse()
        };
        let bring = if self.back { delta_braid(n)?.compose(&bring)? } else { bring };
        gap.compose(&bring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gamma;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn hopf_link_numbers() {
        let link = SurgeredLink::from_cycles(w(2, &[1, 1]), true);
        assert_eq!(link.linking_number("c1", "c2").unwrap(), 1);
        assert_eq!(link.linking_number("c1", AXIS).unwrap(), 1);
        let aug = SurgeredLink::from_cycles(axis_augmented_braid(&BraidWord::identity(1)), false);
        assert_eq!(aug.linking_number("c1", "c2").unwrap(), 1);
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(SurgeredLink::new(w(3, &[1]), true, vec![("a".into(), vec![1]), ("b".into(), vec![2, 3])]).is_err());
        assert!(SurgeredLink::new(w(3, &[1]), true, vec![("a".into(), vec![1, 2])]).is_err());
        assert!(SurgeredLink::new(w(2, &[]), true, vec![("axis".into(), vec![1]), ("b".into(), vec![2])]).is_err());
    }

    #[test]
    fn erase_needs_infinity() {
        let link = SurgeredLink::from_cycles(w(2, &[1, 1]), true).with_filling("c1", ExtendedRational::new(1, 2).unwrap()).unwrap();
        assert!(matches!(link.erase_component("c1"), Err(Error::NotErasable { .. })));
        let gone = link.with_filling("c1", ExtendedRational::INFINITY).unwrap().erase_component("c1").unwrap();
        assert_eq!(gone.braid.strands(), 1);
        assert_eq!(gone.components[0].strands, vec![1]);
    }

    #[test]
    fn fixed_twist_round_trip_on_gamma() {
        let g = gamma(1, 2).unwrap();
        let link =
            SurgeredLink::new(g.word.clone(), true, vec![("fixed".into(), vec![1]), ("main".into(), (2..=g.word.strands()).collect())])
                .unwrap()
                .with_filling("fixed", ExtendedRational::new(1, 3).unwrap())
                .unwrap();
        let down = link.twist_fixed("fixed", -3, 0).unwrap();
        assert_eq!(down.braid.strands(), g.word.strands() + 6);
        assert!(down.filling("fixed").unwrap().unwrap().is_infinite());
        let up = down.twist_fixed("fixed", 3, 0).unwrap();
        assert_eq!(up.filling("fixed").unwrap(), link.filling("fixed").unwrap());
        assert!(crate::braid::words_equal(&up.braid, &link.braid).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let link = SurgeredLink::from_cycles(w(3, &[1, 1, 2]), true).with_filling("c1", ExtendedRational::new(-7, 2).unwrap()).unwrap();
        let back = SurgeredLink::from_json(&link.to_json()).unwrap();
        assert_eq!(back, link);
        assert!(link.to_json().contains("\"filling\": [\n        -7,\n        2\n      ]"));
    }
}
