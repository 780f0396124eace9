//! The square model of the tight horseshoe, in exact arithmetic.

use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Q = Rational64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquarePoint {
    pub x: Q,
    pub y: Q,
}

impl SquarePoint {
    pub fn new(x: Q, y: Q) -> Result<Self> {
        let unit = |v: Q| v >= Q::zero() && v <= Q::one();
        if !(unit(x) && unit(y)) {
            return Err(Error::InvalidParameter(format!("({x}, {y}) is outside the unit square")));
        }
        Ok(SquarePoint { x, y })
    }

    pub fn on_boundary(&self) -> bool {
        self.x.is_zero() || self.y.is_zero() || self.x.is_one() || self.y.is_one()
    }
}

fn half() -> Q {
    Q::new(1, 2)
}

/// Stretch by 2 across, squash by 2 up, right half flipped onto the top.
pub fn horseshoe_f(p: SquarePoint) -> SquarePoint {
    let two = Q::from_integer(2);
    if p.x <= half() {
        SquarePoint { x: two * p.x, y: p.y / two }
    } else {
        SquarePoint { x: two - two * p.x, y: Q::one() - p.y / two }
    }
}

/// The `i ≥ 1` with `v ∈ [2^{−i}, 2^{−i+1}]`, preferring the longer segment;
/// `None` if `v` is a segment endpoint or zero.
fn segment(v: Q) -> Option<u32> {
    if v <= Q::zero() {
        return None;
    }
    let mut i = 1;
    let mut lo = half();
    while v < lo {
        lo /= 2;
        i += 1;
        if i > 62 {
            return None;
        }
    }
    let hi = lo * 2;
    (v != lo && v != hi).then_some(i)
}

fn is_segment_end(v: Q) -> bool {
    v.is_zero() || (*v.numer() == 1 && v.denom().count_ones() == 1)
}

/// The class of a point in the sphere: `∞` or the set of identified points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointClass {
    Infinity,
    Points(Vec<SquarePoint>),
}

/// The fold partner of a boundary point. Corners and fold endpoints go to
/// the `∞` class and have no partner.
pub fn boundary_ident(p: SquarePoint) -> Result<Option<SquarePoint>> {
    if !p.on_boundary() {
        return Err(Error::InvalidParameter(format!("({}, {}) is not on the boundary", p.x, p.y)));
    }
    Ok(match class(p) {
        PointClass::Infinity => None,
        PointClass::Points(v) => Some(*v.iter().find(|&&q| q != p).unwrap_or(&p)),
    })
}

pub fn class(p: SquarePoint) -> PointClass {
    let one = Q::one();
    let (x, y) = (p.x, p.y);
    let corner = (x.is_zero() || x == one) && (y.is_zero() || y == one);
    if corner || (x.is_zero() && is_segment_end(y)) || (y.is_zero() && is_segment_end(x)) {
        return PointClass::Infinity;
    }
    let partner = if y == one {
        Some(SquarePoint { x: one - x, y })
    } else if x == one {
        Some(SquarePoint { x, y: one - y })
    } else if x.is_zero() {
        segment(y).map(|i| SquarePoint { x, y: Q::new(3, 1 << i) - y })
    } else if y.is_zero() {
        segment(x).map(|i| SquarePoint { x: Q::new(3, 1 << i) - x, y })
    } else {
        None
    };
    let mut pts = vec![p];
    if let Some(q) = partner {
        if q != p {
            pts.push(q);
        }
    }
    pts.sort();
    PointClass::Points(pts)
}

pub fn same_class(a: SquarePoint, b: SquarePoint) -> bool {
    class(a) == class(b)
}

/// Outcome of [`check_f_respects_ident`]; carries a counterexample on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentCheck {
    pub pairs: usize,
    pub counterexample: Option<(SquarePoint, SquarePoint)>,
}

impl IdentCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn dyadic(rng: &mut impl Rng, bits: u32) -> Q {
    Q::new(rng.gen_range(0..=(1i64 << bits)), 1i64 << bits)
}

fn random_boundary(rng: &mut impl Rng, bits: u32) -> SquarePoint {
    let v = dyadic(rng, bits);
    let (zero, one) = (Q::zero(), Q::one());
    match rng.gen_range(0..4) {
        0 => SquarePoint { x: v, y: one },
        1 => SquarePoint { x: one, y: v },
        2 => SquarePoint { x: zero, y: v },
        _ => SquarePoint { x: v, y: zero },
    }
}

/// Samples fold pairs `p ~ p′` and checks `F(p) ~ F(p′)`, then checks that
/// the two sides of `x = 1/2` glue, and that `F` separates classes.
pub fn check_f_respects_ident(samples: usize, rng: &mut impl Rng) -> IdentCheck {
    const BITS: u32 = 24;
    let mut pairs = 0;
    let fail = |a, b| IdentCheck { pairs: 0, counterexample: Some((a, b)) };
    while pairs < samples {
        let p = random_boundary(rng, BITS);
        let Some(q) = boundary_ident(p).expect("boundary point") else { continue };
        pairs += 1;
        if !same_class(horseshoe_f(p), horseshoe_f(q)) {
            return IdentCheck { pairs, ..fail(p, q) };
        }
    }
    for _ in 0..samples {
        let y = dyadic(rng, BITS);
        let left = horseshoe_f(SquarePoint { x: half(), y });
        // the limit of the right branch as x ↓ 1/2
        let right = SquarePoint { x: Q::one(), y: Q::one() - y / 2 };
        if !same_class(left, right) {
            return IdentCheck { pairs, ..fail(left, right) };
        }
    }
    for _ in 0..samples {
        let a = if rng.gen_bool(0.5) { random_boundary(rng, BITS) } else { SquarePoint { x: dyadic(rng, BITS), y: dyadic(rng, BITS) } };
        let b = match rng.gen_range(0..3) {
            0 => random_boundary(rng, BITS),
            // a likely collision: the top fold partner
            1 => SquarePoint { x: Q::one() - a.x, y: Q::one() },
            _ => SquarePoint { x: dyadic(rng, BITS), y: dyadic(rng, BITS) },
        };
        let (fa, fb) = (horseshoe_f(a), horseshoe_f(b));
        if same_class(fa, fb) && !same_class(a, b) && class(fa) != PointClass::Infinity {
            return IdentCheck { pairs, ..fail(a, b) };
        }
    }
    IdentCheck { pairs, counterexample: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn pt(x: (i64, i64), y: (i64, i64)) -> SquarePoint {
        SquarePoint::new(Q::new(x.0, x.1), Q::new(y.0, y.1)).unwrap()
    }

    #[test]
    fn fixed_points() {
        assert_eq!(horseshoe_f(pt((0, 1), (0, 1))), pt((0, 1), (0, 1)));
        assert_eq!(horseshoe_f(pt((2, 3), (2, 3))), pt((2, 3), (2, 3)));
        assert_eq!(horseshoe_f(pt((1, 2), (0, 1))), pt((1, 1), (0, 1)));
    }

    #[test]
    fn partners() {
        assert_eq!(boundary_ident(pt((1, 4), (1, 1))).unwrap(), Some(pt((3, 4), (1, 1))));
        assert_eq!(boundary_ident(pt((3, 5), (0, 1))).unwrap(), Some(pt((9, 10), (0, 1))));
        assert_eq!(boundary_ident(pt((0, 1), (5, 8))).unwrap(), Some(pt((0, 1), (7, 8))));
        assert_eq!(boundary_ident(pt((0, 1), (1, 4))).unwrap(), None);
        assert_eq!(boundary_ident(pt((1, 1), (1, 2))).unwrap(), Some(pt((1, 1), (1, 2))));
        assert!(boundary_ident(pt((1, 3), (1, 3))).is_err());
    }

    #[test]
    fn images_of_a_bottom_pair_meet_on_top() {
        let (a, b) = (horseshoe_f(pt((3, 5), (0, 1))), horseshoe_f(pt((9, 10), (0, 1))));
        assert_eq!((a, b), (pt((4, 5), (1, 1)), pt((1, 5), (1, 1))));
        assert!(same_class(a, b));
    }

    #[test]
    fn sampled_pairs() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let c = check_f_respects_ident(2000, &mut rng);
        assert!(c.passed(), "{:?}", c.counterexample);
        assert_eq!(c.pairs, 2000);
    }
}
