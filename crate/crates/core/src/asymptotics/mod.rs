//! High precision singularity analysis of the two-jump model
//! `P(u) = u^{-a} + u^{c}`.
//!
//! Everything here is numeric (MPFR floats through `rug`) but checked against
//! exact data: polynomial residuals, exact series coefficients and the
//! dynamic-programming counts.

mod area;
mod extractor;
mod knuth;
mod roots;
mod rotation;

use std::f64::consts::LOG2_10;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

use crate::error::{Error, Result};

pub use area::{
    area_convergence, convergence_report, duchon_area_constant, scaling_area_constant, AreaConvergence, AreaSample,
    MAX_AREA_LENGTH,
};
pub use extractor::{local_extractor, PuiseuxTerm};
pub use knuth::{
    an_bn_asymptotic, eval_int_poly, kappa2_minpoly_residual, knuth_constants, AnBnEstimate, AsymptoticProfile,
    PuiseuxAtRho, KAPPA1_MINPOLY, KAPPA2_MINPOLY, TAU2_ANNIHILATOR,
};
pub use roots::{kernel_roots_at, small_branches_at, KernelRoots};
pub use rotation::{rotation_kappa, rotation_law_check, rotation_samples, RotationReport};

/// Working precision in decimal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    digits: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision { digits: Self::DEFAULT_DIGITS }
    }
}

impl Precision {
    pub const DEFAULT_DIGITS: u32 = 50;
    /// Guard bits carried on top of the requested digits.
    const GUARD_BITS: u32 = 64;

    pub fn new(digits: u32) -> Result<Self> {
        if !(15..=10_000).contains(&digits) {
            return Err(Error::InvalidArgument(format!("precision of {digits} digits outside 15..=10000")));
        }
        Ok(Precision { digits })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> u32 {
        (self.digits as f64 * LOG2_10).ceil() as u32 + Self::GUARD_BITS
    }

    /// Root-finding and residual tolerance `10^{-(digits - 10)}`.
    pub fn tolerance(&self) -> Float {
        Float::with_val(self.bits(), 10).pow(-(self.digits as i32 - 10))
    }
}

/// `tau`, `rho = 1/P(tau)` and the period `p = a + c` of the jump polynomial.
#[derive(Clone, Debug)]
pub struct StructuralConstants {
    pub a: u64,
    pub c: u64,
    pub tau: Float,
    pub rho: Float,
    pub omega: Complex,
}

impl StructuralConstants {
    pub fn period(&self) -> u64 {
        self.a + self.c
    }

    fn bits(&self) -> u32 {
        self.tau.prec()
    }

    /// `P^{(k)}(u)`.
    pub fn p_derivative(&self, u: &Float, k: u32) -> Float {
        let (a, c) = (self.a as i64, self.c as i64);
        // d^k/du^k u^e = e (e-1) ... (e-k+1) u^{e-k}
        let falling = |e: i64| -> i64 { (0..k as i64).map(|j| e - j).product() };
        let term = |e: i64| -> Float {
            Float::with_val(self.bits(), u.pow(e as i32 - k as i32)) * Float::with_val(self.bits(), falling(e))
        };
        term(-a) + term(c)
    }

    /// The `k`-th dominant singularity `rho omega^k`.
    pub fn singularity(&self, k: u64) -> Complex {
        let w = Complex::with_val(self.bits(), (&self.omega).pow(k as u32));
        w * &self.rho
    }

    /// `|P'(tau)|`.
    pub fn p_prime_residual(&self) -> Float {
        self.p_derivative(&self.tau, 1).abs()
    }

    /// `|1 - rho P(tau)|`.
    pub fn rho_residual(&self) -> Float {
        (Float::with_val(self.bits(), 1) - self.p_derivative(&self.tau, 0) * &self.rho).abs()
    }

    /// Leading Puiseux coefficient `-sqrt(2 P(tau) / P''(tau))` of the
    /// dominant small branch at `rho`.
    pub fn puiseux_leading(&self) -> Float {
        let r = self.p_derivative(&self.tau, 0) * 2u32 / self.p_derivative(&self.tau, 2);
        -r.sqrt()
    }

    /// The first three coefficients `(C, C_2, C_3)` of
    /// `u_1(rho (1 - e)) = tau + C e^{1/2} + C_2 e + C_3 e^{3/2} + ...`,
    /// from matching powers of `e^{1/2}` in `P(u_1) = P(tau) / (1 - e)`.
    pub fn puiseux_coefficients(&self) -> [Float; 3] {
        let bits = self.bits();
        let d: Vec<Float> = (0..=4).map(|k| self.p_derivative(&self.tau, k)).collect();
        let c1 = self.puiseux_leading();
        let c1sq = Float::with_val(bits, c1.square_ref());
        // e^{3/2}: P'' C C_2 + P''' C^3 / 6 = 0
        let c2 = -Float::with_val(bits, &d[3] * &c1sq) / Float::with_val(bits, &d[2] * 6u32);
        // e^2: P'' (C_2^2 + 2 C C_3)/2 + P''' C^2 C_2 / 2 + P'''' C^4 / 24 = P
        let rest = Float::with_val(bits, &d[2] * Float::with_val(bits, c2.square_ref())) / 2u32
            + Float::with_val(bits, &d[3] * &c1sq) * &c2 / 2u32
            + Float::with_val(bits, &d[4] * Float::with_val(bits, c1sq.square_ref())) / 24u32;
        let c3 = (Float::with_val(bits, &d[0] - rest)) / Float::with_val(bits, &d[2] * &c1);
        [c1, c2, c3]
    }
}

pub(crate) fn check_jumps(a: u64, c: u64) -> Result<()> {
    if a == 0 || c == 0 {
        return Err(Error::InvalidArgument(format!("jumps -{a}/+{c} need a, c >= 1")));
    }
    if rug::Integer::from(a).gcd(&rug::Integer::from(c)) != 1 {
        return Err(Error::InvalidArgument(format!("jumps -{a}/+{c} must be coprime")));
    }
    Ok(())
}

pub fn structural_constants(a: u64, c: u64, prec: Precision) -> Result<StructuralConstants> {
    check_jumps(a, c)?;
    let bits = prec.bits();
    let p = (a + c) as u32;
    let tau = (Float::with_val(bits, a) / c).root(p);
    let pt = Float::with_val(bits, (&tau).pow(-(a as i32))) + Float::with_val(bits, (&tau).pow(c as i32));
    let rho = pt.recip();
    let two_pi = Float::with_val(bits, Constant::Pi) * 2u32;
    let omega = Complex::with_val(bits, (Float::new(bits), two_pi / p)).exp();
    Ok(StructuralConstants { a, c, tau, rho, omega })
}
