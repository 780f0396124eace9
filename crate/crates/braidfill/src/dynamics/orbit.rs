use serde::{Deserialize, Serialize};

use crate::braid::Permutation;
use crate::error::{Error, Result};
use crate::families::{fold_position, pi_q};

/// A cyclic permutation of `1..=N` that increases on `1..=fold` and
/// decreases on `fold+1..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPattern {
    perm: Permutation,
    fold: usize,
}

impl OrbitPattern {
    pub fn new(perm: Permutation, fold: usize) -> Result<Self> {
        let n = perm.degree();
        if n < 2 {
            return Err(Error::InvalidParameter("an orbit pattern needs at least two points".into()));
        }
        if fold == 0 || fold >= n {
            return Err(Error::InvalidParameter(format!("fold {fold} out of range for {n} points")));
        }
        if !perm.is_full_cycle() {
            return Err(Error::InvalidParameter("orbit pattern is not a single cycle".into()));
        }
        let up = (1..fold).all(|i| perm.image(i) < perm.image(i + 1));
        let down = (fold + 1..n).all(|i| perm.image(i) > perm.image(i + 1));
        if !(up && down) {
            return Err(Error::InvalidParameter(format!("permutation is not unimodal with fold {fold}")));
        }
        Ok(OrbitPattern { perm, fold })
    }

    /// The pattern of `π_{m/n}`, folded at `n − 2m + 1`.
    pub fn of_q(m: u32, n: u32) -> Result<Self> {
        Self::new(pi_q(m, n)?, fold_position(m, n))
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn fold(&self) -> usize {
        self.fold
    }

    pub fn points(&self) -> usize {
        self.perm.degree()
    }
}

/// Itinerary of the orbit point at `start` (default: the rightmost point).
pub fn symbol_code(p: &OrbitPattern, start: Option<usize>) -> Result<Vec<u8>> {
    let n = p.points();
    let start = start.unwrap_or(n);
    if start == 0 || start > n {
        return Err(Error::InvalidParameter(format!("start {start} out of range for {n} points")));
    }
    let mut pos = start;
    let mut code = Vec::with_capacity(n);
    for _ in 0..n {
        code.push(u8::from(pos > p.fold));
        pos = p.perm.image(pos);
    }
    Ok(code)
}

pub fn code_string(code: &[u8]) -> String {
    code.iter().map(|&s| char::from(b'0' + s)).collect()
}

/// Row `i` marks the intervals covered by the image of `[i, i+1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionMatrix {
    pub rows: Vec<Vec<u8>>,
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

pub fn transition_matrix(p: &OrbitPattern) -> TransitionMatrix {
    let n = p.points();
    let rows = (1..n)
        .map(|i| {
            let (a, b) = (p.perm.image(i), p.perm.image(i + 1));
            let (lo, hi) = (a.min(b), a.max(b));
            (1..n).map(|j| u8::from(lo <= j && j < hi)).collect()
        })
        .collect();
    TransitionMatrix { rows }
}

const PERRON_MAX_ITER: usize = 1_000_000;

/// Spectral radius of a nonnegative matrix by power iteration on `M + I`,
/// which has the same Perron vector and no rival eigenvalue on the circle.
pub fn perron_root(m: &TransitionMatrix, eps: f64) -> Result<f64> {
    let n = m.size();
    if n == 0 {
        return Err(Error::InvalidParameter("empty matrix".into()));
    }
    let mut x = vec![1.0f64; n];
    let mut last = f64::NAN;
    for _ in 0..PERRON_MAX_ITER {
        let mut y: Vec<f64> = x.clone();
        for (i, row) in m.rows.iter().enumerate() {
            y[i] += row.iter().zip(&x).filter(|(&a, _)| a != 0).map(|(_, &v)| v).sum::<f64>();
        }
        // Collatz–Wielandt bounds when every entry is positive
        let ratios: Vec<f64> = y.iter().zip(&x).filter(|(_, &v)| v > 0.0).map(|(a, b)| a / b).collect();
        let norm = y.iter().cloned().fold(0.0, f64::max);
        if norm == 0.0 {
            return Ok(0.0);
        }
        if ratios.len() == n {
            let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = ratios.iter().cloned().fold(0.0, f64::max);
            if hi - lo < eps {
                return Ok((lo + hi) / 2.0 - 1.0);
            }
        }
        let x_norm = x.iter().cloned().fold(0.0, f64::max);
        let est = norm / x_norm - 1.0;
        if ratios.len() < n && (est - last).abs() < eps * 1e-3 {
            return Ok(est);
        }
        last = est;
        x = y.into_iter().map(|v| v / norm).collect();
    }
    Err(Error::NoConvergence("power iteration for the Perron root".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes() {
        let p = OrbitPattern::of_q(1, 3).unwrap();
        assert_eq!(p.fold(), 2);
        assert_eq!(code_string(&symbol_code(&p, None).unwrap()), "10011");
        let p = OrbitPattern::of_q(1, 4).unwrap();
        assert_eq!(code_string(&symbol_code(&p, Some(6)).unwrap()), "100011");
        assert!(symbol_code(&p, Some(7)).is_err());
    }

    #[test]
    fn one_point_rejected() {
        assert!(OrbitPattern::new(Permutation::identity(1), 1).is_err());
    }

    #[test]
    fn matrix_of_one_third() {
        let m = transition_matrix(&OrbitPattern::of_q(1, 3).unwrap());
        assert_eq!(m.rows, vec![vec![0, 1, 1, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 1], vec![1, 1, 0, 0]]);
    }

    #[test]
    fn two_points() {
        let p = OrbitPattern::new(Permutation::from_one_line(&[2, 1]).unwrap(), 1).unwrap();
        let m = transition_matrix(&p);
        assert_eq!(m.rows, vec![vec![1]]);
        assert!((perron_root(&m, 1e-12).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn golden_ratio() {
        let m = TransitionMatrix { rows: vec![vec![1, 1], vec![1, 0]] };
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((perron_root(&m, 1e-12).unwrap() - phi).abs() < 1e-9);
    }

    #[test]
    fn rows_are_contiguous() {
        for (m, n) in [(1, 5), (2, 7), (3, 10), (2, 9), (1, 20)] {
            let t = transition_matrix(&OrbitPattern::of_q(m, n).unwrap());
            for row in &t.rows {
                let ones: Vec<usize> = row.iter().enumerate().filter(|(_, &v)| v == 1).map(|(j, _)| j).collect();
                assert!(!ones.is_empty());
                assert_eq!(ones.last().unwrap() - ones[0] + 1, ones.len());
            }
        }
    }
}
