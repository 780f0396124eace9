use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A surgery coefficient `b/a`, with `∞ = 1/0`.
///
/// Stored reduced with `a ≥ 0`, and `b = 1` whenever `a = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct ExtendedRational {
    b: i64,
    a: i64,
}

impl ExtendedRational {
    pub const INFINITY: ExtendedRational = ExtendedRational { b: 1, a: 0 };

    pub fn new(b: i64, a: i64) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::InvalidParameter("0/0 is not a coefficient".into()));
        }
        if a == 0 {
            return Ok(Self::INFINITY);
        }
        let g = b.gcd(&a);
        let s = a.signum();
        Ok(ExtendedRational { b: s * b / g, a: s * a / g })
    }

    pub fn integer(b: i64) -> Self {
        ExtendedRational { b, a: 1 }
    }

    /// `k + 1/j`.
    pub fn plus_reciprocal(k: i64, j: i64) -> Result<Self> {
        Self::new(k * j + 1, j)
    }

    pub fn numerator(&self) -> i64 {
        self.b
    }

    pub fn denominator(&self) -> i64 {
        self.a
    }

    pub fn is_infinite(&self) -> bool {
        self.a == 0
    }

    /// The `(b, a)` pair handed to a Dehn filling.
    pub fn pair(&self) -> (i64, i64) {
        (self.b, self.a)
    }

    /// `1/(t + 1/r)`: the coefficient on the component being twisted.
    pub fn twist_update(self, t: i64) -> Self {
        // 1/(t + a/b) = b/(tb + a)
        Self::new(self.b, t * self.b + self.a).expect("b and a are never both zero")
    }

    /// `r + t·lk²`: the coefficient on every other component.
    pub fn offset_update(self, t: i64, lk: i64) -> Self {
        if self.is_infinite() {
            return self;
        }
        Self::new(self.b + t * lk * lk * self.a, self.a).expect("a ≠ 0")
    }

    /// `a² + b²`, the size that must grow for hyperbolic Dehn surgery.
    pub fn norm(&self) -> i128 {
        (self.a as i128).pow(2) + (self.b as i128).pow(2)
    }
}

impl TryFrom<[i64; 2]> for ExtendedRational {
    type Error = Error;
    fn try_from(p: [i64; 2]) -> Result<Self> {
        Self::new(p[0], p[1])
    }
}

impl From<ExtendedRational> for [i64; 2] {
    fn from(r: ExtendedRational) -> [i64; 2] {
        [r.b, r.a]
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a {
            0 => write!(f, "∞"),
            1 => write!(f, "{}", self.b),
            a => write!(f, "{}/{}", self.b, a),
        }
    }
}

impl fmt::Debug for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∞" || s.eq_ignore_ascii_case("inf") {
            return Ok(Self::INFINITY);
        }
        let bad = || Error::Parse(s.to_string());
        match s.split_once('/') {
            Some((b, a)) => Self::new(b.trim().parse().map_err(|_| bad())?, a.trim().parse().map_err(|_| bad())?),
            None => Ok(Self::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}
