use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::orbit::{symbol_code, OrbitPattern};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Symbol {
    Zero,
    One,
    /// exactly on the turning point
    Turn,
}

/// `T_t(x) = min(2 + t(x − 1), t(1 − x))`.
pub fn tent(t: f64, x: f64) -> f64 {
    (2.0 + t * (x - 1.0)).min(t * (1.0 - x))
}

pub fn turning_point(t: f64) -> f64 {
    1.0 - 1.0 / t
}

pub fn tent_itinerary(t: f64, x0: f64, length: usize) -> Vec<Symbol> {
    let c = turning_point(t);
    let mut x = x0;
    let mut out = Vec::with_capacity(length);
    for _ in 0..length {
        out.push(match x.partial_cmp(&c) {
            Some(Ordering::Less) => Symbol::Zero,
            Some(Ordering::Greater) => Symbol::One,
            _ => Symbol::Turn,
        });
        x = tent(t, x);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TentParams {
    pub t: f64,
    /// width of the final bisection bracket
    pub eps: f64,
}

const COMPARE_LEN: usize = 400;
/// Points this close to the turning point are not trusted to a side.
const GUARD: f64 = 1e-13;

/// Compares the kneading sequence of `T_t` with `code^∞` in the unimodal
/// order, in which larger `t` gives a larger sequence. `None` when the orbit
/// comes too close to the turning point before the sequences split.
fn compare_kneading(t: f64, code: &[u8]) -> Option<Ordering> {
    let c = turning_point(t);
    let mut x = 1.0;
    let mut odd = false;
    for i in 0..COMPARE_LEN {
        if (x - c).abs() < GUARD {
            return None;
        }
        let s = u8::from(x > c);
        let want = code[i % code.len()];
        if s != want {
            let ord = s.cmp(&want);
            return Some(if odd { ord.reverse() } else { ord });
        }
        odd ^= s == 1;
        x = tent(t, x);
    }
    None
}

/// The slope `t ∈ (√2, 2)` whose tent map has kneading sequence `code^∞`,
/// `code` being the itinerary of the rightmost point of `π_q`.
pub fn t_of_q(m: u32, n: u32, eps: f64) -> Result<TentParams> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    let code = symbol_code(&OrbitPattern::of_q(m, n)?, None)?;
    let (mut lo, mut hi) = (2f64.sqrt(), 2.0);
    let bad = || Error::NoConvergence(format!("no tent slope in (√2, 2) has kneading sequence of {m}/{n}"));
    if compare_kneading(lo, &code) != Some(Ordering::Less) {
        return Err(bad());
    }
    while hi - lo >= eps {
        let mid = (lo + hi) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        match compare_kneading(mid, &code) {
            Some(Ordering::Less) => lo = mid,
            Some(_) => hi = mid,
            // within rounding of the answer
            None => return Ok(TentParams { t: mid, eps: hi - lo }),
        }
    }
    if hi >= 2.0 && compare_kneading(hi, &code) == Some(Ordering::Less) {
        return Err(bad());
    }
    Ok(TentParams { t: (lo + hi) / 2.0, eps: hi - lo })
}
