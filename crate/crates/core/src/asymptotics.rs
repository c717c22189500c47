//! Bounds behind the large-`k` case: the largest irreducible degree of `S_k`
//! against twice the partition count.
//!
//! A level-3 crack follows once `dim π_m ≥ 2p(k) + 2`. The lower bound
//! `e^{-c√k} √(k!)` (with `c = π/√6`) and the upper bound
//! `p(k) ≤ e^{π√(2k/3)} / (4k√3)` reduce that to `r(k) ≥ 1`. All real-valued
//! quantities are computed in log space.

use std::f64::consts::PI;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::biguint;
use crate::partitions::{max_dimension, partition_count, ENUMERATION_CAP};

/// `c = π/√6`.
pub fn vk_constant() -> f64 {
    PI / 6f64.sqrt()
}

fn ln_factorial(k: u64) -> f64 {
    libm::lgamma(k as f64 + 1.0)
}

/// `e^{-c√k} √(k!)`.
pub fn vk_lower(k: u64) -> f64 {
    let k_f = k as f64;
    (-vk_constant() * k_f.sqrt() + 0.5 * ln_factorial(k)).exp()
}

/// `e^{π√(2k/3)} / (4k√3)`.
pub fn hr_upper(k: u64) -> f64 {
    let k_f = k as f64;
    (PI * (2.0 * k_f / 3.0).sqrt() - (4.0 * k_f * 3f64.sqrt()).ln()).exp()
}

/// `r(k) = (2k√3 e^{-c√k} √(k!) - 4k√3) / e^{π√(2k/3)}`, evaluated in log
/// space.
pub fn r_ratio(k: u64) -> f64 {
    let k_f = k as f64;
    let a = 2.0 * k_f * 3f64.sqrt();
    let growth = PI * (2.0 * k_f / 3.0).sqrt();
    let lead = (a.ln() - vk_constant() * k_f.sqrt() + 0.5 * ln_factorial(k) - growth).exp();
    lead - 2.0 * a * (-growth).exp()
}

/// One row of the bound table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundRow {
    pub k: usize,
    #[serde(serialize_with = "biguint")]
    pub dim_max: BigUint,
    /// `2p(k) + 2`.
    #[serde(serialize_with = "biguint")]
    pub threshold: BigUint,
    pub vk_lower: f64,
    pub hr_upper: f64,
    pub r: f64,
    pub eq4_holds: bool,
}

/// Compares the true largest degree of `S_k` with `2p(k) + 2`.
pub fn inequality_check(k: usize) -> Result<BoundRow> {
    if k == 0 || k > ENUMERATION_CAP {
        return Err(Error::size_limit("bound table k", k, ENUMERATION_CAP));
    }
    let dim_max = max_dimension(k)?.dimension;
    let threshold = partition_count(k)? * 2u32 + 2u32;
    Ok(BoundRow {
        k,
        eq4_holds: dim_max >= threshold,
        dim_max,
        threshold,
        vk_lower: vk_lower(k as u64),
        hr_upper: hr_upper(k as u64),
        r: r_ratio(k as u64),
    })
}

pub fn bound_table(k_from: usize, k_to: usize) -> Result<Vec<BoundRow>> {
    if k_from == 0 || k_from > k_to {
        return Err(Error::Invalid(format!("bad range {k_from}..={k_to}")));
    }
    if k_to > ENUMERATION_CAP {
        return Err(Error::size_limit("bound table k", k_to, ENUMERATION_CAP));
    }
    (k_from..=k_to).map(inequality_check).collect()
}

/// Aligned text rendering of a bound table.
pub fn render_bound_table(rows: &[BoundRow]) -> String {
    let mut out = format!(
        "{:>3} {:>12} {:>10} {:>14} {:>14} {:>12}  eq4\n",
        "k", "dim_max", "2p(k)+2", "vk_lower", "hr_upper", "r(k)"
    );
    for row in rows {
        out.push_str(&format!(
            "{:>3} {:>12} {:>10} {:>14.6e} {:>14.6e} {:>12.6}  {}\n",
            row.k,
            row.dim_max,
            row.threshold,
            row.vk_lower,
            row.hr_upper,
            row.r,
            if row.eq4_holds { "yes" } else { "no" }
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn row(k: usize) -> (u64, u64, bool) {
        let r = inequality_check(k).unwrap();
        (
            r.dim_max.to_u64().unwrap(),
            r.threshold.to_u64().unwrap(),
            r.eq4_holds,
        )
    }

    #[test]
    fn table_rows() {
        assert_eq!(row(8), (90, 46, true));
        assert_eq!(row(9), (216, 62, true));
        assert_eq!(row(5), (6, 16, false));
        assert_eq!(row(1), (1, 4, false));
        assert!(row(12).2);
    }

    #[test]
    fn point_values() {
        assert!((vk_lower(1) - 0.277_329_255_639_007_5).abs() < 1e-12);
        assert!((vk_lower(12) - 257.423_943_048_523_9).abs() < 1e-8);
        assert!((hr_upper(1) - 1.876_670_422_605_369).abs() < 1e-12);
        assert!((r_ratio(12) - 1.468_907_290_856_088).abs() < 1e-10);
        assert!(r_ratio(11) < 1.0);
    }

    #[test]
    fn ranges() {
        assert!(bound_table(0, 3).is_err());
        assert!(bound_table(5, 4).is_err());
        assert!(inequality_check(61).is_err());
        assert_eq!(bound_table(8, 11).unwrap().len(), 4);
    }
}
