use rug::{Integer, Rational};

use super::{count_ne_below, LatticeStep, RationalSlope};
use crate::error::{Error, Result};

/// Minimum vertical distance between a South/West walk and the line
/// `y = (a x + b) / c`, for a walk that starts at a point `q` on the line and
/// ends at the origin.
///
/// Zero as soon as the walk touches or crosses the line after its first
/// step; otherwise the minimum of `(a p_1 + b) / c - p_2` over the walk's
/// points other than `q`. The strictness flag of `slope` is ignored.
pub fn min_y_distance(slope: &RationalSlope, q: (i64, i64), steps: &[LatticeStep]) -> Result<Rational> {
    if !slope.on_line(q.0, q.1) {
        return Err(Error::InvalidArgument(format!("{q:?} is not on the boundary")));
    }
    let (a, b, c) = (slope.a() as i64, slope.b() as i64, slope.c() as i64);
    let (mut x, mut y) = q;
    let mut min_gap: Option<i64> = None;
    for (k, step) in steps.iter().enumerate() {
        if !matches!(step, LatticeStep::South | LatticeStep::West) {
            return Err(Error::InvalidArgument(format!("step {k} is {step:?}, expected South or West")));
        }
        let (dx, dy) = step.delta();
        x += dx;
        y += dy;
        let gap = a * x + b - c * y;
        min_gap = Some(min_gap.map_or(gap, |g| g.min(gap)));
    }
    if (x, y) != (0, 0) {
        return Err(Error::InvalidArgument(format!("walk ends at ({x}, {y}), not at the origin")));
    }
    match min_gap {
        Some(g) if g > 0 => Ok(Rational::from((g, c))),
        _ => Ok(Rational::new()),
    }
}

/// `|W_t|`: the number of South/West walks from `q` (on the line) to the
/// origin whose minimum y-distance is at least `t`, for `0 < t <= 1`.
///
/// Such a walk starts with a South step; dropping it leaves a walk from
/// `q - (0, 1)` that stays at distance `>= t` from the line, i.e. touches or
/// stays below the line lowered by `ceil(c t) / c`.
pub fn count_w_t(slope: &RationalSlope, q: (i64, i64), t: &Rational) -> Result<Integer> {
    if !slope.on_line(q.0, q.1) {
        return Err(Error::InvalidArgument(format!("{q:?} is not on the boundary")));
    }
    if t.cmp0().is_le() || *t > 1 {
        return Err(Error::InvalidArgument(format!("t = {t} outside (0, 1]")));
    }
    if q.0 < 0 || q.1 < 1 {
        return Ok(Integer::new());
    }
    let shift = Rational::from(t * slope.c()).ceil().numer().to_i64().expect("small");
    let offset = slope.b() as i64 - shift;
    if offset < 0 {
        return Ok(Integer::new());
    }
    let lowered = RationalSlope::touching(slope.a(), offset as u64, slope.c())?;
    Ok(count_ne_below(&lowered, (q.0, q.1 - 1)))
}

/// `|W_{k/c}|` for `k = 1..=c` at a fixed starting point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    pub q: (i64, i64),
    pub c: u64,
    pub counts: Vec<(Rational, Integer)>,
}

impl DistanceProfile {
    /// `int_0^1 |W_t| dt = (1/c) sum_k |W_{k/c}|`, as `|W_t|` is a left-continuous
    /// step function with jumps on the grid `k/c`.
    pub fn integral(&self) -> Rational {
        let total: Integer = self.counts.iter().map(|(_, n)| n).sum();
        Rational::from((total, Integer::from(self.c)))
    }
}

pub fn distance_profile(slope: &RationalSlope, q: (i64, i64)) -> Result<DistanceProfile> {
    let c = slope.c();
    let counts = (1..=c)
        .map(|k| {
            let t = Rational::from((k, c));
            count_w_t(slope, q, &t).map(|n| (t, n))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DistanceProfile { q, c, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use LatticeStep::{South as S, West as W};

    /// Every South/West walk from `q` to the origin.
    fn all_walks(q: (i64, i64)) -> Vec<Vec<LatticeStep>> {
        let n = (q.0 + q.1) as usize;
        (0u64..1 << n)
            .filter(|m| m.count_ones() as i64 == q.1)
            .map(|m| (0..n).map(|i| if m >> i & 1 == 1 { S } else { W }).collect())
            .collect()
    }

    #[test]
    fn knuth_walks_of_length_six() {
        let slope = RationalSlope::strict(2, 2, 5).unwrap();
        let q = (4, 2);
        let first = [S, W, W, S, W, W];
        let second = [S, W, S, W, W, W];
        let third = [S, S, W, W, W, W];
        assert_eq!(min_y_distance(&slope, q, &first).unwrap(), Rational::from((1, 5)));
        assert_eq!(min_y_distance(&slope, q, &second).unwrap(), Rational::from((2, 5)));
        assert_eq!(min_y_distance(&slope, q, &third).unwrap(), Rational::from((2, 5)));
        assert_eq!(min_y_distance(&slope, q, &[W, S, W, S, W, W]).unwrap(), 0);

        let deltas: Vec<Rational> =
            all_walks(q).iter().map(|w| min_y_distance(&slope, q, w).unwrap()).filter(|d| d.cmp0().is_gt()).collect();
        assert_eq!(deltas.len(), 3);

        assert_eq!(count_w_t(&slope, q, &Rational::from((1, 5))).unwrap(), 3);
        assert_eq!(count_w_t(&slope, q, &Rational::from((2, 5))).unwrap(), 2);
        assert_eq!(count_w_t(&slope, q, &Rational::from((3, 5))).unwrap(), 0);
        assert_eq!(count_w_t(&slope, q, &Rational::from((4, 5))).unwrap(), 0);
        assert_eq!(distance_profile(&slope, q).unwrap().integral(), 1);
    }

    #[test]
    fn rejects_malformed_walks() {
        let slope = RationalSlope::strict(2, 2, 5).unwrap();
        assert!(min_y_distance(&slope, (4, 2), &[S, W]).is_err());
        assert!(min_y_distance(&slope, (4, 1), &[S, W, W, W, W]).is_err());
        assert!(min_y_distance(&slope, (1, 1), &[LatticeStep::North]).is_err());
        assert!(count_w_t(&slope, (4, 2), &Rational::from(0)).is_err());
    }

    #[test]
    fn dp_matches_enumeration() {
        for (a, b, c) in [(2, 2, 5), (1, 1, 1), (1, 2, 3), (3, 2, 4), (2, 3, 5)] {
            let slope = RationalSlope::strict(a, b, c).unwrap();
            for q1 in 0..9i64 {
                let num = a as i64 * q1 + b as i64;
                if num % c as i64 != 0 {
                    continue;
                }
                let q = (q1, num / c as i64);
                if q.0 + q.1 > 14 {
                    continue;
                }
                let deltas: Vec<Rational> =
                    all_walks(q).iter().map(|w| min_y_distance(&slope, q, w).unwrap()).collect();
                for k in 1..=c {
                    let t = Rational::from((k, c));
                    let brute = deltas.iter().filter(|d| d.cmp0().is_gt() && **d >= t).count();
                    assert_eq!(count_w_t(&slope, q, &t).unwrap(), brute, "{a},{b},{c} {q:?} t={t}");
                }
                let profile = distance_profile(&slope, q).unwrap();
                assert!(profile.counts.windows(2).all(|w| w[0].1 >= w[1].1));
                let brute_sum: Rational = deltas.iter().sum();
                assert_eq!(profile.integral(), brute_sum);
            }
        }
    }
}
