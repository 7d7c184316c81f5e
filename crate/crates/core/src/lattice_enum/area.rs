use rug::{Integer, Rational};

use super::JumpPolynomial;
use crate::error::{Error, Result};

/// Excursion statistics at one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaRow {
    pub length: usize,
    /// Number of excursions (walks `0 -> 0` staying `>= 0`).
    pub count: Integer,
    /// Twice the summed trapezoid area: each step `h -> h'` contributes
    /// `h + h'`.
    pub doubled_area: Integer,
}

impl AreaRow {
    pub fn mean_area(&self) -> Result<Rational> {
        if self.count.is_zero() {
            return Err(Error::NoExcursions(self.length));
        }
        Ok(Rational::from((self.doubled_area.clone(), Integer::from(&self.count * 2u32))))
    }
}

/// Excursion counts and summed areas for every length `0..=max_len`, from a
/// single forward pass.
///
/// Altitudes from which the origin can no longer be reached by step
/// `max_len` are pruned; excursions of any shorter length are unaffected
/// because their prefixes never exceed that bound.
pub fn excursion_area_table(jumps: &JumpPolynomial, max_len: usize) -> Result<Vec<AreaRow>> {
    let weights = jumps.integer_weights()?;
    let up = jumps.max_jump().max(0);
    let down = (-jumps.min_jump()).max(0);
    let cap = |k: usize| -> i64 { (up * k as i64).min(down * (max_len - k) as i64) };

    let mut counts = vec![Integer::from(1)];
    let mut areas = vec![Integer::new()];
    let mut rows = vec![AreaRow { length: 0, count: Integer::from(1), doubled_area: Integer::new() }];
    for k in 1..=max_len {
        let hi = cap(k);
        let mut next_counts = vec![Integer::new(); (hi + 1) as usize];
        let mut next_areas = vec![Integer::new(); (hi + 1) as usize];
        for (h, (cnt, area)) in counts.iter().zip(&areas).enumerate() {
            if cnt.is_zero() {
                continue;
            }
            let h = h as i64;
            for (j, w) in &weights {
                let t = h + j;
                if t < 0 || t > hi {
                    continue;
                }
                let slot = t as usize;
                let step_area = Integer::from(cnt * (h + t));
                if *w == 1 {
                    next_counts[slot] += cnt;
                    next_areas[slot] += area;
                    next_areas[slot] += step_area;
                } else {
                    next_counts[slot] += Integer::from(cnt * w);
                    next_areas[slot] += Integer::from(area * w);
                    next_areas[slot] += step_area * w;
                }
            }
        }
        counts = next_counts;
        areas = next_areas;
        rows.push(AreaRow { length: k, count: counts[0].clone(), doubled_area: areas[0].clone() });
    }
    Ok(rows)
}

/// Mean trapezoid area under the excursions of length `n`.
pub fn mean_excursion_area(jumps: &JumpPolynomial, n: usize) -> Result<Rational> {
    let table = excursion_area_table(jumps, n)?;
    table[n].mean_area()
}
