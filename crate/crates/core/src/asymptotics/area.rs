//! Mean area under excursions with jumps `+2, -3`, reported against the
//! claimed growth constant `K = sqrt(15 pi) / 2` and against the Brownian
//! excursion limit `sqrt(pi a c / 8)`.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};

use super::Precision;
use crate::error::{Error, Result};
use crate::lattice_enum::{excursion_area_table, JumpPolynomial};

/// Largest length accepted by [`convergence_report`].
pub const MAX_AREA_LENGTH: usize = 5000;

/// `K = sqrt(15 pi) / 2`.
pub fn duchon_area_constant(prec: Precision) -> Float {
    let bits = prec.bits();
    (Float::with_val(bits, Constant::Pi) * 15u32).sqrt() / 2u32
}

/// `sigma sqrt(pi / 8)`: the mean area of a length-`n` excursion with jumps
/// `-a, +c` divided by `n^{3/2}` tends to this, since uniform excursions are
/// excursions of the zero-drift walk with `P(-a) = c/(a+c)`, `P(+c) = a/(a+c)`
/// and variance `sigma^2 = a c`.
pub fn scaling_area_constant(a: u64, c: u64, prec: Precision) -> Float {
    let bits = prec.bits();
    (Float::with_val(bits, Constant::Pi) * (a * c) / 8u32).sqrt()
}

#[derive(Clone, Debug)]
pub struct AreaSample {
    pub n: usize,
    pub mean_area: Rational,
    /// `mean_area / n^{3/2}`.
    pub ratio: Float,
}

/// Exact mean areas and the extrapolated growth constant.
#[derive(Clone, Debug)]
pub struct AreaConvergence {
    pub samples: Vec<AreaSample>,
    /// `K` from fitting `ratio(n) = K + c_1 n^{-1/2} + c_2 n^{-1}` through
    /// the three largest samples.
    pub extrapolated: Float,
    /// `sqrt(15 pi) / 2`.
    pub constant: Float,
    /// `sqrt(6 pi / 8) = sqrt(3 pi) / 2`, from [`scaling_area_constant`].
    pub scaling_constant: Float,
}

impl AreaConvergence {
    pub fn relative_error(&self) -> Float {
        (Float::with_val(self.constant.prec(), &self.extrapolated / &self.constant) - 1u32).abs()
    }

    /// Relative error of the extrapolation against the scaling limit.
    pub fn scaling_relative_error(&self) -> Float {
        (Float::with_val(self.constant.prec(), &self.extrapolated / &self.scaling_constant) - 1u32).abs()
    }

    pub fn raw_relative_error(&self) -> Float {
        let last = &self.samples.last().expect("at least three samples").ratio;
        (Float::with_val(self.constant.prec(), last / &self.constant) - 1u32).abs()
    }
}

/// Solves the 3x3 system `[1, n^{-1/2}, n^{-1}] (K, c1, c2) = ratio` by
/// Cramer's rule and returns `K`.
fn fit_constant(points: &[(usize, &Float)], bits: u32) -> Float {
    let row = |n: usize| -> [Float; 3] {
        let nf = Float::with_val(bits, n);
        [Float::with_val(bits, 1), Float::with_val(bits, nf.sqrt_ref()).recip(), nf.recip()]
    };
    let m: Vec<[Float; 3]> = points.iter().map(|(n, _)| row(*n)).collect();
    let y: Vec<&Float> = points.iter().map(|(_, r)| *r).collect();
    let det3 = |c0: [&Float; 3], c1: [&Float; 3], c2: [&Float; 3]| -> Float {
        let t = |a: &Float, b: &Float, c: &Float| Float::with_val(bits, a * b) * c;
        t(c0[0], c1[1], c2[2]) + t(c1[0], c2[1], c0[2]) + t(c2[0], c0[1], c1[2])
            - t(c2[0], c1[1], c0[2])
            - t(c0[0], c2[1], c1[2])
            - t(c1[0], c0[1], c2[2])
    };
    let col = |j: usize| [&m[0][j], &m[1][j], &m[2][j]];
    let d = det3(col(0), col(1), col(2));
    let dk = det3([y[0], y[1], y[2]], col(1), col(2));
    dk / d
}

/// Mean areas at the given lengths (multiples of 5, at least three, from one
/// dynamic-programming pass) and the extrapolated constant.
pub fn area_convergence(lengths: &[usize], prec: Precision) -> Result<AreaConvergence> {
    if lengths.len() < 3 {
        return Err(Error::InvalidArgument("extrapolation needs at least three lengths".into()));
    }
    if let Some(n) = lengths.iter().find(|&&n| n == 0 || n % 5 != 0) {
        return Err(Error::InvalidArgument(format!("length {n} is not a positive multiple of 5")));
    }
    let mut lengths = lengths.to_vec();
    lengths.sort_unstable();
    lengths.dedup();
    let max_len = *lengths.last().expect("non-empty");
    let jumps = JumpPolynomial::from_jumps(&[2, -3])?;
    let table = excursion_area_table(&jumps, max_len)?;
    let bits = prec.bits();
    let samples = lengths
        .iter()
        .map(|&n| {
            let mean_area = table[n].mean_area()?;
            let n32 = Float::with_val(bits, n).pow(Float::with_val(bits, 1.5f64));
            let ratio = Float::with_val(bits, &mean_area) / n32;
            Ok(AreaSample { n, mean_area, ratio })
        })
        .collect::<Result<Vec<_>>>()?;
    let tail: Vec<(usize, &Float)> = samples[samples.len() - 3..].iter().map(|s| (s.n, &s.ratio)).collect();
    let extrapolated = fit_constant(&tail, bits);
    Ok(AreaConvergence {
        samples,
        extrapolated,
        constant: duchon_area_constant(prec),
        scaling_constant: scaling_area_constant(3, 2, prec),
    })
}

/// Convergence table over the lengths `max_n / 2^k` (rounded down to
/// multiples of 5), extrapolating from `max_n / 4`, `max_n / 2`, `max_n`.
pub fn convergence_report(max_n: usize, prec: Precision) -> Result<AreaConvergence> {
    if max_n > MAX_AREA_LENGTH {
        return Err(Error::InvalidArgument(format!("max length {max_n} above the limit {MAX_AREA_LENGTH}")));
    }
    let mut lengths = Vec::new();
    let mut n = max_n;
    while n >= 5 {
        lengths.push(n / 5 * 5);
        n /= 2;
    }
    if lengths.len() < 3 {
        return Err(Error::InvalidArgument(format!("max length {max_n} too small, need at least 20")));
    }
    area_convergence(&lengths, prec)
}
