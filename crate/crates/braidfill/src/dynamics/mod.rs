//! Horseshoe codes, tent-map slopes, train track dilatations and the tight
//! horseshoe on the square.

mod horseshoe;
mod kneading;
mod orbit;

pub use horseshoe::{boundary_ident, check_f_respects_ident, class, horseshoe_f, same_class, IdentCheck, PointClass, SquarePoint, Q};
pub use kneading::{t_of_q, tent, tent_itinerary, turning_point, Symbol, TentParams};
pub use orbit::{code_string, perron_root, symbol_code, transition_matrix, OrbitPattern, TransitionMatrix};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// One row of a dilatation table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DilatationRow {
    pub q: String,
    pub t: f64,
    pub perron: f64,
    pub diff: f64,
}

pub fn dilatation_row(m: u32, n: u32, eps: f64) -> Result<DilatationRow> {
    let t = t_of_q(m, n, eps)?.t;
    let perron = perron_root(&transition_matrix(&OrbitPattern::of_q(m, n)?), eps)?;
    Ok(DilatationRow { q: format!("{m}/{n}"), t, perron, diff: (t - perron).abs() })
}

/// Rows for every reduced `m/n ≤ 1/3` with `n` up to `max_n`, ordered by
/// decreasing `q`.
pub fn sweep(max_n: u32, eps: f64) -> Result<Vec<DilatationRow>> {
    let mut qs: Vec<(u32, u32)> =
        (3..=max_n).flat_map(|n| (1..=n / 3).map(move |m| (m, n))).filter(|&(m, n)| num_integer::gcd(m, n) == 1).collect();
    qs.sort_by(|a, b| (u64::from(b.0) * u64::from(a.1)).cmp(&(u64::from(a.0) * u64::from(b.1))));
    qs.par_iter().map(|&(m, n)| dilatation_row(m, n, eps)).collect()
}

pub fn write_csv<W: std::io::Write>(rows: &[DilatationRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perron_matches_kneading() {
        for (m, n) in [(1, 3), (1, 4), (1, 5), (2, 7), (3, 10), (1, 10)] {
            let r = dilatation_row(m, n, 1e-12).unwrap();
            assert!(r.diff < 1e-6, "{r:?}");
        }
    }

    #[test]
    fn sweep_is_sorted_and_csv_has_header() {
        let rows = sweep(8, 1e-9).unwrap();
        assert_eq!(rows.first().unwrap().q, "1/3");
        assert_eq!(rows.last().unwrap().q, "1/8");
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("q,t,perron,diff\n"));
    }
}
