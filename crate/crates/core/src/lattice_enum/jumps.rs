use std::collections::BTreeMap;

use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// Sparse Laurent polynomial `P(u) = sum_j w_j u^j` encoding the allowed
/// altitude jumps `j` and their (positive) weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpPolynomial {
    jumps: BTreeMap<i64, Rational>,
}

impl JumpPolynomial {
    pub fn new(jumps: BTreeMap<i64, Rational>) -> Result<Self> {
        if jumps.is_empty() {
            return Err(Error::InvalidArgument("jump set is empty".into()));
        }
        if let Some((j, w)) = jumps.iter().find(|(_, w)| w.cmp0().is_le()) {
            return Err(Error::InvalidArgument(format!("jump {j} has non-positive weight {w}")));
        }
        Ok(JumpPolynomial { jumps })
    }

    /// Unit-weight jumps; repeated entries add up their weights.
    pub fn from_jumps(jumps: &[i64]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &j in jumps {
            *map.entry(j).or_insert_with(Rational::new) += 1u32;
        }
        Self::new(map)
    }

    /// `P(u) = u^{-a} + u^{c}`.
    pub fn down_up(a: u64, c: u64) -> Result<Self> {
        if a == 0 || c == 0 {
            return Err(Error::InvalidArgument("two-jump model needs a, c >= 1".into()));
        }
        Self::from_jumps(&[-(a as i64), c as i64])
    }

    pub fn jumps(&self) -> &BTreeMap<i64, Rational> {
        &self.jumps
    }

    pub fn min_jump(&self) -> i64 {
        *self.jumps.keys().next().expect("nonempty")
    }

    pub fn max_jump(&self) -> i64 {
        *self.jumps.keys().next_back().expect("nonempty")
    }

    /// Number of small roots `a = -min jump` (zero when no jump is negative).
    pub fn small_root_count(&self) -> u64 {
        (-self.min_jump()).max(0) as u64
    }

    /// Period of the support, `gcd` of pairwise jump differences. For
    /// `{-a, +c}` this is `a + c`.
    pub fn period(&self) -> u64 {
        let lo = self.min_jump();
        self.jumps.keys().fold(0u64, |g, &j| Integer::from(g).gcd(&Integer::from(j - lo)).to_u64().unwrap_or(0))
    }

    pub fn is_unit_weighted(&self) -> bool {
        self.jumps.values().all(|w| *w == 1)
    }

    /// Weights as integers, if all of them are integral.
    pub fn integer_weights(&self) -> Result<Vec<(i64, Integer)>> {
        self.jumps
            .iter()
            .map(|(&j, w)| {
                if w.denom() == &1 {
                    Ok((j, w.numer().clone()))
                } else {
                    Err(Error::NotIntegral(format!("weight {w} of jump {j}")))
                }
            })
            .collect()
    }

    /// Time reversal `P(1/u)`.
    pub fn reversed(&self) -> Self {
        JumpPolynomial { jumps: self.jumps.iter().map(|(&j, w)| (-j, w.clone())).collect() }
    }
}
