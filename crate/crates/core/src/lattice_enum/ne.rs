use rug::Integer;

use super::{LatticeStep, RationalSlope};
use crate::error::{Error, Result};

/// Number of North/East paths from `(0, 0)` to `end` whose every lattice
/// point lies in the region allowed by `slope`. Zero when either endpoint is
/// outside the region.
pub fn count_ne_below(slope: &RationalSlope, end: (i64, i64)) -> Integer {
    let (x, y) = end;
    if x < 0 || y < 0 || !slope.admits(0, 0) || !slope.admits(x, y) {
        return Integer::new();
    }
    let width = x as usize + 1;
    // One row per y, rolled.
    let mut row = vec![Integer::new(); width];
    for py in 0..=y {
        for px in 0..=x {
            let i = px as usize;
            if !slope.admits(px, py) {
                row[i] = Integer::new();
                continue;
            }
            if px == 0 && py == 0 {
                row[i] = Integer::from(1);
                continue;
            }
            // row[i] still holds the value from (px, py - 1).
            if px > 0 {
                let (left, right) = row.split_at_mut(i);
                right[0] += &left[i - 1];
            }
        }
    }
    row[x as usize].clone()
}

/// The affine map `(x, y) -> (x + y, a x - c y + b)`.
pub fn map_point(slope: &RationalSlope, point: (i64, i64)) -> (i64, i64) {
    let (x, y) = point;
    (x + y, slope.a() as i64 * x - slope.c() as i64 * y + slope.b() as i64)
}

/// Image of a North/East path from the origin: the ordinates of the directed
/// walk starting at altitude `b`, where East jumps by `+a` and North by `-c`.
pub fn map_path(slope: &RationalSlope, steps: &[LatticeStep]) -> Result<Vec<i64>> {
    let mut altitude = slope.b() as i64;
    let mut out = Vec::with_capacity(steps.len() + 1);
    out.push(altitude);
    for (k, step) in steps.iter().enumerate() {
        altitude += match step {
            LatticeStep::East => slope.a() as i64,
            LatticeStep::North => -(slope.c() as i64),
            other => {
                return Err(Error::InvalidArgument(format!("step {k} is {other:?}, only North/East steps map")));
            }
        };
        out.push(altitude);
    }
    Ok(out)
}
