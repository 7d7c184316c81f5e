use rug::{Integer, Rational};

use super::JumpPolynomial;
use crate::error::{Error, Result};

trait Accum: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_mul(&mut self, x: &Self, w: &Self);
    fn add(&mut self, x: &Self);
}

impl Accum for Integer {
    fn zero() -> Self {
        Integer::new()
    }
    fn one() -> Self {
        Integer::from(1)
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add_mul(&mut self, x: &Self, w: &Self) {
        if *w == 1 {
            *self += x;
        } else {
            *self += x * w;
        }
    }
    fn add(&mut self, x: &Self) {
        *self += x;
    }
}

impl Accum for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn is_zero(&self) -> bool {
        self.cmp0().is_eq()
    }
    fn add_mul(&mut self, x: &Self, w: &Self) {
        *self += Rational::from(x * w);
    }
    fn add(&mut self, x: &Self) {
        *self += x;
    }
}

/// Altitude window `[lo, hi]` worth keeping after `k` of `n` steps.
fn window(start: i64, end: Option<i64>, k: usize, n: usize, up: i64, down: i64, constrained: bool) -> (i64, i64) {
    let k = k as i64;
    let mut lo = start - down * k;
    let mut hi = start + up * k;
    if let Some(e) = end {
        let rest = n as i64 - k;
        lo = lo.max(e - up * rest);
        hi = hi.min(e + down * rest);
    }
    if constrained {
        lo = lo.max(0);
    }
    (lo, hi)
}

fn run<T: Accum>(weights: &[(i64, T)], n: usize, start: i64, end: Option<i64>, constrained: bool) -> T {
    if constrained && (start < 0 || end.is_some_and(|e| e < 0)) {
        return T::zero();
    }
    let up = weights.iter().map(|(j, _)| *j).max().unwrap_or(0).max(0);
    let down = (-weights.iter().map(|(j, _)| *j).min().unwrap_or(0)).max(0);
    let (mut lo, mut hi) = window(start, end, 0, n, up, down, constrained);
    if lo > hi {
        return T::zero();
    }
    let mut row = vec![T::zero(); (hi - lo + 1) as usize];
    row[(start - lo) as usize] = T::one();
    for k in 1..=n {
        let (nlo, nhi) = window(start, end, k, n, up, down, constrained);
        if nlo > nhi {
            return T::zero();
        }
        let mut next = vec![T::zero(); (nhi - nlo + 1) as usize];
        for (i, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let h = lo + i as i64;
            for (j, w) in weights {
                let t = h + j;
                if t >= nlo && t <= nhi {
                    next[(t - nlo) as usize].add_mul(v, w);
                }
            }
        }
        row = next;
        lo = nlo;
        hi = nhi;
    }
    match end {
        Some(e) if e >= lo && e <= hi => row[(e - lo) as usize].clone(),
        Some(_) => T::zero(),
        None => {
            let mut total = T::zero();
            for v in &row {
                total.add(v);
            }
            total
        }
    }
}

/// Number of `n`-step walks from altitude `start` to `end` (any altitude when
/// `None`); with `constrained`, every altitude along the way stays `>= 0`.
///
/// Integral weights multiply the count; use [`weighted_count_directed`] for
/// rational weights.
pub fn count_directed(
    jumps: &JumpPolynomial,
    n: usize,
    start: i64,
    end: Option<i64>,
    constrained: bool,
) -> Result<Integer> {
    let weights = jumps.integer_weights()?;
    Ok(run(&weights, n, start, end, constrained))
}

/// Weighted variant of [`count_directed`] with exact rational weights.
pub fn weighted_count_directed(
    jumps: &JumpPolynomial,
    n: usize,
    start: i64,
    end: Option<i64>,
    constrained: bool,
) -> Rational {
    let weights: Vec<(i64, Rational)> = jumps.jumps().iter().map(|(&j, w)| (j, w.clone())).collect();
    run(&weights, n, start, end, constrained)
}

/// Full table of walk counts `counts[k][h]` for every length `k <= n` and
/// every reachable altitude `h`, starting from a single walk at `start`.
///
/// Satisfies `counts[k+1][h] = sum_j w_j counts[k][h - j]`, restricted to
/// `h >= 0` when constrained.
#[derive(Clone, Debug)]
pub struct CountTable {
    start: i64,
    constrained: bool,
    lo: Vec<i64>,
    rows: Vec<Vec<Integer>>,
}

impl CountTable {
    pub fn build(jumps: &JumpPolynomial, n: usize, start: i64, constrained: bool) -> Result<Self> {
        if constrained && start < 0 {
            return Err(Error::InvalidArgument(format!("constrained walks cannot start at {start}")));
        }
        let weights = jumps.integer_weights()?;
        let up = jumps.max_jump().max(0);
        let down = (-jumps.min_jump()).max(0);
        let mut lo_list = Vec::with_capacity(n + 1);
        let mut rows = Vec::with_capacity(n + 1);
        let (lo0, _) = window(start, None, 0, n, up, down, constrained);
        lo_list.push(lo0);
        let mut first = vec![Integer::new(); (start - lo0 + 1) as usize];
        first[(start - lo0) as usize] = Integer::from(1);
        rows.push(first);
        for k in 1..=n {
            let (nlo, nhi) = window(start, None, k, n, up, down, constrained);
            let mut next = vec![Integer::new(); (nhi - nlo + 1).max(0) as usize];
            let lo = lo_list[k - 1];
            for (i, v) in rows[k - 1].iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let h = lo + i as i64;
                for (j, w) in &weights {
                    let t = h + j;
                    if t >= nlo && t <= nhi {
                        next[(t - nlo) as usize].add_mul(v, w);
                    }
                }
            }
            lo_list.push(nlo);
            rows.push(next);
        }
        Ok(CountTable { start, constrained, lo: lo_list, rows })
    }

    pub fn length(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn constrained(&self) -> bool {
        self.constrained
    }

    /// Count of `k`-step walks ending at altitude `h`.
    pub fn count(&self, k: usize, h: i64) -> Integer {
        let Some(row) = self.rows.get(k) else {
            return Integer::new();
        };
        let idx = h - self.lo[k];
        if idx < 0 || idx as usize >= row.len() {
            return Integer::new();
        }
        row[idx as usize].clone()
    }

    /// `[count(0, h), count(1, h), ..., count(n, h)]`: the coefficients of the
    /// generating function of walks ending at `h`.
    pub fn series_at(&self, h: i64) -> Vec<Integer> {
        (0..=self.length()).map(|k| self.count(k, h)).collect()
    }

    /// Total number of `k`-step walks.
    pub fn total(&self, k: usize) -> Integer {
        self.rows.get(k).map(|r| r.iter().sum()).unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive enumeration of all jump sequences.
    fn brute(jumps: &[i64], n: usize, start: i64, end: Option<i64>, constrained: bool) -> u64 {
        let m = jumps.len();
        let mut total = 0;
        let mut idx = vec![0usize; n];
        loop {
            let mut h = start;
            let mut ok = !(constrained && h < 0);
            for &i in &idx {
                h += jumps[i];
                if constrained && h < 0 {
                    ok = false;
                }
            }
            if ok && end.map_or(true, |e| e == h) {
                total += 1;
            }
            let mut p = 0;
            loop {
                if p == n {
                    return total;
                }
                idx[p] += 1;
                if idx[p] < m {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }

    #[test]
    fn knuth_length_five() {
        let p = JumpPolynomial::down_up(2, 5).unwrap();
        assert_eq!(brute(&[-2, 5], 5, 4, Some(1), true), 3);
        assert_eq!(brute(&[-2, 5], 5, 3, Some(0), true), 2);
        assert_eq!(count_directed(&p, 5, 4, Some(1), true).unwrap(), 3);
        assert_eq!(count_directed(&p, 5, 3, Some(0), true).unwrap(), 2);
        assert_eq!(count_directed(&p, 0, 4, Some(4), true).unwrap(), 1);
        assert_eq!(count_directed(&p, 0, 4, Some(3), true).unwrap(), 0);
    }

    #[test]
    fn matches_brute_force_small() {
        for jumps in [vec![-2, 5], vec![-1, 1], vec![-3, 2], vec![-2, 0, 1]] {
            let p = JumpPolynomial::from_jumps(&jumps).unwrap();
            for n in 0..9 {
                for start in 0..4 {
                    for end in [None, Some(0), Some(1), Some(-2)] {
                        for constrained in [true, false] {
                            let got = count_directed(&p, n, start, end, constrained).unwrap();
                            assert_eq!(got, brute(&jumps, n, start, end, constrained), "{jumps:?} {n} {start} {end:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_agrees_with_single_queries() {
        let p = JumpPolynomial::down_up(3, 5).unwrap();
        let table = CountTable::build(&p, 20, 3, true).unwrap();
        for k in 0..=20 {
            for h in 0..6 {
                assert_eq!(table.count(k, h), count_directed(&p, k, 3, Some(h), true).unwrap());
            }
            assert_eq!(table.total(k), count_directed(&p, k, 3, None, true).unwrap());
        }
        assert_eq!(table.count(0, 3), 1);
        assert_eq!(table.count(0, 2), 0);
    }

    #[test]
    fn weighted_counts() {
        let mut map = std::collections::BTreeMap::new();
        map.insert(-1, Rational::from((1, 2)));
        map.insert(1, Rational::from(3));
        let p = JumpPolynomial::new(map).unwrap();
        // Two steps from 0 back to 0 staying >= 0: only (+1, -1), weight 3 * 1/2.
        assert_eq!(weighted_count_directed(&p, 2, 0, Some(0), true), Rational::from((3, 2)));
        assert!(count_directed(&p, 2, 0, Some(0), true).is_err());
        let q = JumpPolynomial::from_jumps(&[-1, 1, 1]).unwrap();
        assert_eq!(count_directed(&q, 2, 0, Some(0), true).unwrap(), 2);
    }
}
