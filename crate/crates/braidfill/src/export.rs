//! Links for the outside world: JSON, planar diagram codes and SnapPy scripts.

use std::fmt::Write as _;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::families::{beta, delta_word, parse_fraction, zeta_word, BLACK, FIXED};
use crate::surgery::{axis_augmented_braid, ExtendedRational, SurgeredLink, AXIS};
use crate::verifier::{gamma_link, verify_magic, KNOT, ZETA_COMPONENTS};

/// A crossing `[a, b, c, d]`: `a` is the incoming under edge, then
/// counterclockwise.
pub type PdCrossing = [usize; 4];

/// Planar diagram code of the closure of `braid`, strands running down the
/// page and `σ_i` putting the left string over the right one.
///
/// Edges are numbered along each component in turn, in the order given, so a
/// reader that sorts components by their smallest label keeps that order.
pub fn pd_code(braid: &BraidWord, components: &[Vec<usize>]) -> Result<Vec<PdCrossing>> {
    let w = braid.letters();
    let len = w.len();
    let on = |t: usize, pos: usize| {
        let i = w[t].unsigned_abs() as usize;
        pos == i || pos == i + 1
    };
    let next_crossing = |pos: usize, from: usize| -> Option<usize> { (0..len).map(|k| (from + k) % len).find(|&t| on(t, pos)) };
    // under in, over in, under out, over out
    let mut ends = vec![[0usize; 4]; len];
    let mut label = 0;
    let mut covered = 0;
    for comp in components {
        let start_pos = *comp.iter().min().ok_or(Error::BadComponents)?;
        let Some(t0) = next_crossing(start_pos, 0) else {
            return Err(Error::InvalidParameter(format!("component at strand {start_pos} has no crossings")));
        };
        label += 1;
        let first = label;
        let mut cur = first;
        let (mut t, mut pos) = (t0, start_pos);
        loop {
            let i = w[t].unsigned_abs() as usize;
            let left = pos == i;
            let over = left == (w[t] > 0);
            let slot = if over { 1 } else { 0 };
            ends[t][slot] = cur;
            pos = if left { i + 1 } else { i };
            let t_next = next_crossing(pos, (t + 1) % len).expect("the strand just crossed");
            covered += 1;
            if (t_next, pos) == (t0, start_pos) {
                ends[t][slot + 2] = first;
                break;
            }
            label += 1;
            cur = label;
            ends[t][slot + 2] = cur;
            t = t_next;
        }
    }
    if covered != 2 * len {
        return Err(Error::BadComponents);
    }
    Ok(w.iter().zip(&ends).map(|(&l, &[ui, oi, uo, oo])| if l > 0 { [ui, oi, uo, oo] } else { [ui, oo, uo, oi] }).collect())
}

/// PD code of the link's closure, its axis (if present) last.
pub fn link_pd(link: &SurgeredLink) -> Result<(Vec<String>, Vec<PdCrossing>)> {
    let mut names: Vec<String> = link.components.iter().map(|c| c.name.clone()).collect();
    let mut comps: Vec<Vec<usize>> = link.components.iter().map(|c| c.strands.clone()).collect();
    let braid = if link.axis {
        names.push(AXIS.to_string());
        comps.push(vec![link.braid.strands() + 1]);
        axis_augmented_braid(&link.braid)
    } else {
        link.braid.clone()
    };
    Ok((names, pd_code(&braid, &comps)?))
}

/// A Python script that builds the link exterior in SnapPy, fills it and
/// prints the cusp count and volume. Fillings are `(b, a)` pairs as stored.
pub fn snappy_script(link: &SurgeredLink, title: &str) -> Result<String> {
    let (names, pd) = link_pd(link)?;
    let mut fillings = Vec::new();
    for n in &names {
        fillings.push(match link.filling(n)? {
            Some(r) => format!("({}, {})", r.numerator(), r.denominator()),
            None => "None".to_string(),
        });
    }
    let mut s = String::new();
    let _ = writeln!(s, "# {title}");
    let _ = writeln!(s, "import snappy\n");
    let _ = writeln!(s, "components = [{}]", names.iter().map(|n| format!("{n:?}")).collect::<Vec<_>>().join(", "));
    let _ = writeln!(s, "fillings = [{}]", fillings.join(", "));
    let _ = writeln!(s, "pd = [");
    for c in &pd {
        let _ = writeln!(s, "    ({}, {}, {}, {}),", c[0], c[1], c[2], c[3]);
    }
    let _ = writeln!(s, "]\n");
    s.push_str(
        "M = snappy.Link([list(c) for c in pd]).exterior()\n\
         assert M.num_cusps() == len(components)\n\
         M.dehn_fill([f if f is not None else (0, 0) for f in fillings])\n\
         print(\"cusps\", M.num_cusps())\n\
         print(\"volume\", M.volume())\n\
         print(\"solution\", M.solution_type())\n",
    );
    Ok(s)
}

/// The manifolds the CLI can export, as closures with their axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Manifold {
    /// `β_q` and its axis; needs `q`
    #[value(name = "Mq")]
    Mq,
    /// `γ_ν` and its axis; needs `ν`, optional `k` fills the fixed string with `1/k`
    #[value(name = "Mhat")]
    Mhat,
    /// `δ` and its axis; optional `κ` fills black with `−4 + 1/κ`
    #[value(name = "M")]
    M,
    /// `ζ` and its axis
    Zeta,
    /// end of the magic-manifold chain
    Magic,
}

impl std::str::FromStr for Manifold {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        <Manifold as clap::ValueEnum>::from_str(s, false).map_err(|_| Error::Parse(format!("unknown manifold {s:?}")))
    }
}

#[derive(Clone, Debug, Default)]
pub struct ManifoldParams {
    pub q: Option<String>,
    pub nu: Option<String>,
    pub k: Option<u32>,
    pub kappa: Option<u32>,
}

pub fn manifold_link(which: Manifold, p: &ManifoldParams) -> Result<SurgeredLink> {
    let need = |v: &Option<String>, flag: &str| {
        v.as_deref().ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required for this manifold"))).and_then(parse_fraction)
    };
    match which {
        Manifold::Mq => {
            let (m, n) = need(&p.q, "q")?;
            let b = beta(m, n)?;
            let all = (1..=b.word.strands()).collect();
            SurgeredLink::new(b.word, true, vec![(KNOT.to_string(), all)])
        }
        Manifold::Mhat => {
            let (l, m) = need(&p.nu, "nu")?;
            let link = gamma_link(l, m)?;
            match p.k {
                Some(0) => Err(Error::InvalidParameter("k must be at least 1".into())),
                Some(k) => link.with_filling(FIXED, ExtendedRational::new(1, i64::from(k))?),
                None => Ok(link),
            }
        }
        Manifold::M => {
            let d = delta_word();
            let comps = ZETA_COMPONENTS.iter().filter_map(|&c| d.role(c).map(|s| (c.to_string(), s.to_vec()))).collect();
            let link = SurgeredLink::new(d.word, true, comps)?;
            match p.kappa {
                Some(0) => Err(Error::InvalidParameter("κ must be at least 1".into())),
                Some(k) => link.with_filling(BLACK, ExtendedRational::plus_reciprocal(-4, i64::from(k))?),
                None => Ok(link),
            }
        }
        Manifold::Zeta => {
            let z = zeta_word();
            let comps = ZETA_COMPONENTS.iter().map(|&c| (c.to_string(), z.role(c).expect("ζ role").to_vec())).collect();
            SurgeredLink::new(z.word, true, comps)
        }
        Manifold::Magic => {
            let rep = verify_magic()?;
            if !rep.passed {
                return Err(Error::InvalidParameter("the magic chain did not replay".into()));
            }
            let mut link = rep.link.expect("a passing report has a final state");
            link.ledger.clear();
            Ok(link)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn hopf_link_pd() {
        let pd = pd_code(&w(2, &[1, 1]), &[vec![1], vec![2]]).unwrap();
        assert_eq!(pd.len(), 2);
        let mut labels: Vec<usize> = pd.iter().flatten().copied().collect();
        labels.sort_unstable();
        assert_eq!(labels, vec![1, 1, 2, 2, 3, 3, 4, 4]);
    }

    #[test]
    fn every_edge_twice_and_components_in_order() {
        let link = manifold_link(Manifold::Mhat, &ManifoldParams { nu: Some("1/2".into()), ..Default::default() }).unwrap();
        let (names, pd) = link_pd(&link).unwrap();
        assert_eq!(names, vec![FIXED, KNOT, AXIS]);
        let mut count = std::collections::BTreeMap::new();
        for l in pd.iter().flatten() {
            *count.entry(*l).or_insert(0) += 1;
        }
        assert!(count.values().all(|&c| c == 2));
        assert_eq!(count.len(), 2 * pd.len());
    }

    #[test]
    fn unlinked_component_refused() {
        assert!(pd_code(&w(3, &[1, 1]), &[vec![1], vec![2], vec![3]]).is_err());
    }

    #[test]
    fn script_carries_fillings() {
        let p = ManifoldParams { kappa: Some(2), ..Default::default() };
        let s = snappy_script(&manifold_link(Manifold::M, &p).unwrap(), "M").unwrap();
        assert!(s.contains("fillings = [(-7, 2), None, None, None]"), "{s}");
    }

    #[test]
    fn magic_has_three_cusps() {
        let link = manifold_link(Manifold::Magic, &ManifoldParams::default()).unwrap();
        let (names, _) = link_pd(&link).unwrap();
        assert_eq!(names.len(), 3);
    }
}
