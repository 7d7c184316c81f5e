use rug::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strictness {
    /// Points must satisfy `c y < a x + b`.
    Strict,
    /// Points must satisfy `c y <= a x + b`.
    TouchAllowed,
}

/// Boundary line `y = (a x + b) / c` together with whether paths may touch it.
///
/// The triple is normalized so that `gcd(a, b, c) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalSlope {
    a: u64,
    b: u64,
    c: u64,
    strictness: Strictness,
}

impl RationalSlope {
    pub fn new(a: u64, b: u64, c: u64, strictness: Strictness) -> Result<Self> {
        if a == 0 || c == 0 {
            return Err(Error::InvalidArgument(format!("slope {a}/{c} needs positive a and c")));
        }
        let g = Integer::from(a).gcd(&Integer::from(b)).gcd(&Integer::from(c)).to_u64().unwrap_or(1);
        Ok(RationalSlope { a: a / g, b: b / g, c: c / g, strictness })
    }

    pub fn strict(a: u64, b: u64, c: u64) -> Result<Self> {
        Self::new(a, b, c, Strictness::Strict)
    }

    pub fn touching(a: u64, b: u64, c: u64) -> Result<Self> {
        Self::new(a, b, c, Strictness::TouchAllowed)
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn strictness(&self) -> Strictness {
        self.strictness
    }

    /// Offset of the equivalent touch-allowed line: strictly below
    /// `(a x + b) / c` is touching-or-below `(a x + b - 1) / c`.
    pub fn touch_offset(&self) -> i64 {
        match self.strictness {
            Strictness::Strict => self.b as i64 - 1,
            Strictness::TouchAllowed => self.b as i64,
        }
    }

    /// Whether a lattice point lies in the allowed region.
    pub fn admits(&self, x: i64, y: i64) -> bool {
        (self.c as i64) * y <= (self.a as i64) * x + self.touch_offset()
    }

    /// Whether a point lies exactly on the line.
    pub fn on_line(&self, x: i64, y: i64) -> bool {
        (self.c as i64) * y == (self.a as i64) * x + self.b as i64
    }
}

/// Unit lattice steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeStep {
    North,
    East,
    South,
    West,
}

impl LatticeStep {
    pub fn delta(self) -> (i64, i64) {
        match self {
            LatticeStep::North => (0, 1),
            LatticeStep::East => (1, 0),
            LatticeStep::South => (0, -1),
            LatticeStep::West => (-1, 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let s = RationalSlope::strict(4, 4, 10).unwrap();
        assert_eq!((s.a(), s.b(), s.c()), (2, 2, 5));
        let t = RationalSlope::touching(2, 0, 4).unwrap();
        assert_eq!((t.a(), t.b(), t.c()), (1, 0, 2));
        assert!(RationalSlope::strict(0, 1, 1).is_err());
        assert!(RationalSlope::strict(1, 1, 0).is_err());
    }

    #[test]
    fn strict_is_touch_with_lowered_offset() {
        let strict = RationalSlope::strict(2, 2, 5).unwrap();
        let touch = RationalSlope::touching(2, 1, 5).unwrap();
        for x in 0..20 {
            for y in 0..10 {
                assert_eq!(strict.admits(x, y), touch.admits(x, y));
            }
        }
        assert!(!strict.admits(4, 2));
        assert!(strict.on_line(4, 2));
    }
}
