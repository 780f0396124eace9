//! The braid families: `π_q`, `β'_q`, `β_q`, `γ_ν`, `δ` and `ζ`.

pub mod ribbon;
mod zeta;

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::braid::{half_twist_range, positive_permutation_braid, BraidWord, Permutation};
use crate::error::{Error, Result};
pub use ribbon::{block_cross, block_move, Ribbon, RibbonBraid};
pub use zeta::zeta_word;

pub const FIRST_RIBBON: &str = "first-ribbon";
pub const MID_RIBBON: &str = "mid-ribbon";
pub const FINAL_RIBBON: &str = "final-ribbon";
pub const ROGUE: &str = "rogue";
pub const FIXED: &str = "fixed";
pub const BLACK: &str = "black";
pub const BLUE: &str = "blue";
pub const GREEN: &str = "green";
pub const RED: &str = "red";

/// A braid with named groups of strands (1-based starting positions).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyBraid {
    pub word: BraidWord,
    pub roles: BTreeMap<String, Vec<usize>>,
}

impl FamilyBraid {
    pub fn role(&self, label: &str) -> Option<&[usize]> {
        self.roles.get(label).map(Vec::as_slice)
    }
}

/// `q = m/n` with `gcd(m, n) = 1` and `n ≥ 3m`.
pub fn check_q(m: u32, n: u32) -> Result<()> {
    if m == 0 || n == 0 || m.gcd(&n) != 1 || n < 3 * m {
        return Err(Error::InvalidParameter(format!("q = {m}/{n} must be a reduced fraction in (0, 1/3]")));
    }
    if n + 2 > Permutation::MAX_DEGREE as u32 {
        return Err(Error::TooManyStrands(n as usize + 2));
    }
    Ok(())
}

/// `ν = ℓ/m` in `[0, 1)` in lowest terms (`0/1` for zero).
pub fn check_nu(l: u32, m: u32) -> Result<()> {
    if m == 0 || l >= m || l.gcd(&m) != 1 {
        return Err(Error::InvalidParameter(format!("ν = {l}/{m} must be a reduced fraction in [0, 1)")));
    }
    Ok(())
}

/// Parses `a/b` into a pair of naturals.
pub fn parse_fraction(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse(s.to_string());
    let (a, b) = s.trim().split_once('/').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// The cyclic permutation `π_{m/n}` on `n + 2` points.
pub fn pi_q(m: u32, n: u32) -> Result<Permutation> {
    check_q(m, n)?;
    let (m, n) = (m as usize, n as usize);
    let img: Vec<usize> = (1..=n + 2)
        .map(|r| {
            if r + 3 * m <= n + 1 {
                r + m
            } else if r + 2 * m <= n + 1 {
                r + m + 1
            } else if r + m <= n + 1 {
                2 * n - 2 * m + 4 - r
            } else if r == n - m + 2 {
                n - 2 * m + 2
            } else {
                n + 3 - r
            }
        })
        .collect();
    Permutation::from_one_line(&img)
}

/// Where `π_q` turns from increasing to decreasing.
pub fn fold_position(m: u32, n: u32) -> usize {
    (n - 2 * m + 1) as usize
}

fn beta_roles(m: usize, n: usize, offset: usize) -> BTreeMap<String, Vec<usize>> {
    let w1 = n - 3 * m + 1;
    let range = |a: usize, b: usize| (a + offset..=b + offset).collect::<Vec<_>>();
    let mut roles = BTreeMap::new();
    roles.insert(FIRST_RIBBON.to_string(), range(1, w1));
    roles.insert(MID_RIBBON.to_string(), range(w1 + 1, w1 + 2 * m));
    roles.insert(ROGUE.to_string(), vec![n - m + 2 + offset]);
    roles.insert(FINAL_RIBBON.to_string(), range(n - m + 3, n + 2));
    roles
}

pub fn beta_prime(m: u32, n: u32) -> Result<FamilyBraid> {
    let p = pi_q(m, n)?;
    Ok(FamilyBraid { word: positive_permutation_braid(&p), roles: beta_roles(m as usize, n as usize, 0) })
}

/// The ribbons of `β_{m/n}` at the top of the braid, in order, and the
/// block crossings that send them to their targets.
fn beta_ribbons(m: usize, n: usize) -> RibbonBraid {
    RibbonBraid {
        ribbons: vec![
            Ribbon::new(FIRST_RIBBON, n - 3 * m + 1),
            Ribbon::new("second-ribbon", m),
            Ribbon::new("third-ribbon", m),
            Ribbon::new(ROGUE, 1),
            Ribbon::twisted(FINAL_RIBBON, m, 2),
        ],
        // ribbon-level positive permutation braid of [2,4,5,3,1]
        events: vec![3, 4, 2, 3, 2, 1],
    }
}

/// The half twist on the final `m` strands that conjugates `β'_q` to `β_q`.
pub fn final_half_twist(m: u32, n: u32) -> Result<BraidWord> {
    half_twist_range(n as usize + 2, (n - m + 3) as usize, n as usize + 2)
}

/// `β_{m/n}`, built from its ribbon picture. It equals `H·β'·H⁻¹` with `H`
/// the half twist on the final `m` strands.
pub fn beta(m: u32, n: u32) -> Result<FamilyBraid> {
    check_q(m, n)?;
    let word = beta_ribbons(m as usize, n as usize).expand()?;
    Ok(FamilyBraid { word, roles: beta_roles(m as usize, n as usize, 0) })
}

/// `σ1…σm σm…σ1`: the strand in position 1 encircles strands `2..=m+1`.
pub fn ribbon_clasp(n: usize, m: usize) -> Result<BraidWord> {
    let mut letters: Vec<i32> = (1..=m as i32).collect();
    letters.extend((1..=m as i32).rev());
    BraidWord::new(n, letters)
}

/// `γ_{ℓ/m}`: `β_{m/(3m+ℓ)}` with a fixed string on the left clasping the
/// final ribbon.
pub fn gamma(l: u32, m: u32) -> Result<FamilyBraid> {
    check_nu(l, m)?;
    let n = 3 * m + l;
    let b = beta(m, n)?;
    let strands = n as usize + 3;
    let word = b.word.shifted(1, strands)?.compose(&ribbon_clasp(strands, m as usize)?)?;
    let mut roles = beta_roles(m as usize, n as usize, 1);
    roles.insert(FIXED.to_string(), vec![1]);
    Ok(FamilyBraid { word, roles })
}

/// The ribbon form of `γ_{ℓ/m}`.
pub fn gamma_ribbons(l: u32, m: u32) -> Result<RibbonBraid> {
    check_nu(l, m)?;
    let mut rb = beta_ribbons(m as usize, (3 * m + l) as usize);
    rb.ribbons.insert(0, Ribbon::new(FIXED, 1));
    for e in rb.events.iter_mut() {
        *e += e.signum();
    }
    rb.events.extend([1, 1]);
    Ok(rb)
}

pub const DELTA_LETTERS: [i32; 25] = [6, 5, 4, 3, 9, 8, 8, 9, 7, 6, 5, 4, 3, 2, 1, 8, 7, 6, 5, 4, 3, 2, 1, 8, 6];

pub fn delta_word() -> FamilyBraid {
    let word = BraidWord::new(10, DELTA_LETTERS.to_vec()).expect("valid word");
    let mut roles = BTreeMap::new();
    roles.insert(BLUE.to_string(), vec![1, 3, 5, 7, 9]);
    roles.insert(BLACK.to_string(), vec![2, 4, 6, 8]);
    roles.insert(GREEN.to_string(), vec![10]);
    FamilyBraid { word, roles }
}

/// Builds a family member by name and parameter, such as `beta 1/3`, `gamma 0/1` or `delta`.
pub fn family_by_name(name: &str, param: Option<&str>) -> Result<FamilyBraid> {
    let need = || param.ok_or_else(|| Error::InvalidParameter(format!("{name} needs a parameter")));
    match name {
        "beta" => {
            let (m, n) = parse_fraction(need()?)?;
            beta(m, n)
        }
        "beta-prime" => {
            let (m, n) = parse_fraction(need()?)?;
            beta_prime(m, n)
        }
        "gamma" => {
            let (l, m) = parse_fraction(need()?)?;
            gamma(l, m)
        }
        "delta" => Ok(delta_word()),
        "zeta" => Ok(zeta_word()),
        _ => Err(Error::InvalidParameter(format!("unknown family {name:?}"))),
    }
}
