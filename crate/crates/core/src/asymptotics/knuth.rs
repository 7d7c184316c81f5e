//! Knuth's constants for walks with jumps `-2, +5`: the ratio
//! `A_n / B_n = kappa_1 - kappa_2 / n + O(n^{-2})`.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

use super::{kernel_roots_at, structural_constants, Precision};
use crate::error::{Error, Result};

/// Annihilating polynomial of `tau_2 = u_2(rho)`, coefficients in ascending
/// degree: `500 t^35 + 3900 t^28 + 13540 t^21 + 27708 t^14 + 37500 t^7 + 3125`.
pub const TAU2_ANNIHILATOR: [i64; 36] = {
    let mut c = [0i64; 36];
    c[0] = 3125;
    c[7] = 37500;
    c[14] = 27708;
    c[21] = 13540;
    c[28] = 3900;
    c[35] = 500;
    c
};

/// Minimal polynomial of `kappa_1`: `23x^5 - 41x^4 + 10x^3 - 6x^2 - x - 1`.
pub const KAPPA1_MINPOLY: [i64; 6] = [-1, -1, -6, 10, -41, 23];

/// Minimal polynomial of `(7/3) kappa_2`.
pub const KAPPA2_MINPOLY: [i64; 6] = [-142, 5180, -97580, 628250, -5363750, 11571875];

/// Evaluates an integer polynomial (ascending coefficients) at `x`.
pub fn eval_int_poly(coeffs: &[i64], x: &Float) -> Float {
    let mut acc = Float::new(x.prec());
    for &c in coeffs.iter().rev() {
        acc *= x;
        acc += c;
    }
    acc
}

/// The constants of the two-term expansions of `A_n` and `B_n`.
#[derive(Clone, Debug)]
pub struct AsymptoticProfile {
    pub precision: Precision,
    pub tau: Float,
    pub rho: Float,
    /// `u_2(rho)`, the real negative small root at the singularity.
    pub tau2: Float,
    /// `tau_2 / tau`.
    pub mu: Float,
    pub alpha1: Float,
    pub alpha2: Float,
    pub beta1: Float,
    pub beta2: Float,
    pub kappa1: Float,
    pub kappa2: Float,
}

impl AsymptoticProfile {
    fn bits(&self) -> u32 {
        self.precision.bits()
    }

    pub fn tau2_annihilator_residual(&self) -> Float {
        eval_int_poly(&TAU2_ANNIHILATOR, &self.tau2).abs()
    }

    pub fn kappa1_minpoly_residual(&self) -> Float {
        eval_int_poly(&KAPPA1_MINPOLY, &self.kappa1).abs()
    }

    pub fn kappa2_minpoly_residual(&self) -> Float {
        let x = Float::with_val(self.bits(), &self.kappa2 * 7u32) / 3u32;
        eval_int_poly(&KAPPA2_MINPOLY, &x).abs()
    }

    /// `|kappa_2 - (3/9800)(13 - 236 k - 194 k^2 - 388 k^3 + 437 k^4)|` with
    /// `k = kappa_1`.
    pub fn kappa2_relation_residual(&self) -> Float {
        let p = eval_int_poly(&[13, -236, -194, -388, 437], &self.kappa1) * 3u32 / 9800u32;
        (p - &self.kappa2).abs()
    }

    /// `|kappa_1 - (-5 / (mu^4 + 2 mu^3 + 3 mu^2 + 4 mu) - 1)|`.
    pub fn kappa1_mu_residual(&self) -> Float {
        let d = eval_int_poly(&[0, 4, 3, 2, 1], &self.mu);
        let alt = Float::with_val(self.bits(), -5) / d - 1u32;
        (alt - &self.kappa1).abs()
    }

    /// Puiseux data at `rho`: `u_1 = tau + C sqrt(e) + C' e^{3/2} + ...` and
    /// `u_2 = tau_2 + D e + ...` with `e = 1 - z / rho`.
    pub fn puiseux(&self) -> PuiseuxAtRho {
        let bits = self.bits();
        let c7 = -Float::with_val(bits, &self.tau) / Float::with_val(bits, 5).sqrt();
        // P'''(tau) = 0 kills the linear term, and matching e^2 gives C' = 2C/5.
        let c7_prime = Float::with_val(bits, &c7 * 2u32) / 5u32;
        let t7 = Float::with_val(bits, (&self.tau2).pow(7u32));
        let d7 = Float::with_val(bits, &t7 + 1u32) * &self.tau2 / (t7 * 5u32 - 2u32);
        PuiseuxAtRho { c7, c7_prime, d7 }
    }
}

/// Local expansions of the two small branches at the real singularity.
#[derive(Clone, Debug)]
pub struct PuiseuxAtRho {
    pub c7: Float,
    pub c7_prime: Float,
    pub d7: Float,
}

/// Computes `tau_2` by root finding at `z = rho` and derives the constants.
///
/// Requires at least 30 digits; fails with [`Error::Mismatch`] if the
/// auxiliary relation between `kappa_1` and `kappa_2` does not hold.
pub fn knuth_constants(prec: Precision) -> Result<AsymptoticProfile> {
    if prec.digits() < 30 {
        return Err(Error::InvalidArgument(format!("Knuth constants need >= 30 digits, got {}", prec.digits())));
    }
    let bits = prec.bits();
    let sc = structural_constants(2, 5, prec)?;
    let z = Complex::with_val(bits, (&sc.rho, 0));
    let roots = kernel_roots_at(2, 5, &z, prec)?;
    let tol = prec.tolerance();
    let tau2 = roots
        .small
        .iter()
        .find(|u| u.real().is_sign_negative() && Float::with_val(bits, u.imag().abs_ref()) < tol)
        .map(|u| u.real().clone())
        .ok_or_else(|| Error::RootFinder("no real negative small root at rho".into()))?;

    let sqrt5 = Float::with_val(bits, 5).sqrt();
    let mu = Float::with_val(bits, &tau2 / &sc.tau);
    let alpha1 = eval_int_poly(&[5, 4, 3, 2, 1], &mu) / &sqrt5;
    let beta1 = Float::with_val(bits, &sqrt5 - &alpha1);
    let t7 = Float::with_val(bits, (&tau2).pow(7u32));
    let num = Float::with_val(bits, &t7 * 5u32) * eval_int_poly(&[45, 36, 29, 22, 13], &mu)
        + eval_int_poly(&[-45, -8, 13, 20, 15], &mu) * 2u32;
    let den = (Float::with_val(bits, &t7 * 5u32) - 2u32) * &sqrt5;
    let alpha2 = -(num / den) / 10u32;
    let beta2 = Float::with_val(bits, &sqrt5 * 9u32) / -10i32 - &alpha2;
    let kappa1 = Float::with_val(bits, &alpha1 / &beta1);
    let cross = Float::with_val(bits, &alpha2 * &beta1) - Float::with_val(bits, &alpha1 * &beta2);
    let kappa2 = cross / Float::with_val(bits, beta1.square_ref()) * -3i32 / 14u32;

    let profile = AsymptoticProfile {
        precision: prec,
        tau: sc.tau,
        rho: sc.rho,
        tau2,
        mu,
        alpha1,
        alpha2,
        beta1,
        beta2,
        kappa1,
        kappa2,
    };
    let relation = profile.kappa2_relation_residual();
    if relation > tol {
        return Err(Error::Mismatch(format!("kappa_2 relation residual {}", relation.to_f64())));
    }
    Ok(profile)
}

/// `|poly((7/3) kappa_2)|` at the given precision.
pub fn kappa2_minpoly_residual(prec: Precision) -> Result<Float> {
    Ok(knuth_constants(prec)?.kappa2_minpoly_residual())
}

/// Two-term estimates of `A_n` and `B_n`, and the first-order estimate of
/// their sum.
#[derive(Clone, Debug)]
pub struct AnBnEstimate {
    pub n: u64,
    /// With second-order coefficient `3 alpha_2 / 2`.
    pub a_n: Float,
    pub b_n: Float,
    /// With second-order coefficient `3 alpha_2 / 2 - 39 alpha_1 / 40`
    /// (likewise for `B_n`). The shift is common to both, so `kappa_2` is
    /// unaffected, but only this version has relative error `O(n^{-2})`.
    pub a_n_refined: Float,
    pub b_n_refined: Float,
    pub sum_first_order: Float,
}

/// `A_n ~ alpha_1 rho^{-7n} / sqrt(pi (7n-2)^3) + (3 alpha_2 / 2) rho^{-7n} /
/// sqrt(pi (7n-2)^5)`, likewise for `B_n` with the `beta`s.
pub fn an_bn_asymptotic(n: u64, profile: &AsymptoticProfile) -> Result<AnBnEstimate> {
    if n == 0 {
        return Err(Error::InvalidArgument("asymptotic estimates need n >= 1".into()));
    }
    let bits = profile.bits();
    let pi = Float::with_val(bits, Constant::Pi);
    let growth = Float::with_val(bits, (&profile.rho).pow(-(7 * n as i32)));
    let m = Float::with_val(bits, 7 * n - 2);
    let t1 = Float::with_val(bits, &growth / Float::with_val(bits, &pi * Float::with_val(bits, (&m).pow(3u32))).sqrt());
    let t2 = Float::with_val(bits, &growth / Float::with_val(bits, &pi * Float::with_val(bits, (&m).pow(5u32))).sqrt());
    let est = |c1: &Float, c2: &Float| -> Float {
        Float::with_val(bits, c1 * &t1) + Float::with_val(bits, c2 * &t2) * 3u32 / 2u32
    };
    let a_n = est(&profile.alpha1, &profile.alpha2);
    let b_n = est(&profile.beta1, &profile.beta2);
    // 3/2 (x_2 - 13/20 x_1) = 3/2 x_2 - 39/40 x_1
    let refine = |c1: &Float, c2: &Float| -> Float {
        let shifted = Float::with_val(bits, c2 - Float::with_val(bits, c1 * 13u32) / 20u32);
        est(c1, &shifted)
    };
    let a_n_refined = refine(&profile.alpha1, &profile.alpha2);
    let b_n_refined = refine(&profile.beta1, &profile.beta2);
    let nf = Float::with_val(bits, n);
    let lead = (Float::with_val(bits, 5) / (pi * 343u32)).sqrt();
    let sum_first_order = lead * growth / Float::with_val(bits, (&nf).pow(3u32)).sqrt();
    Ok(AnBnEstimate { n, a_n, b_n, a_n_refined, b_n_refined, sum_first_order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::small_branches_at;
    use crate::asymptotics::{local_extractor, PuiseuxTerm};
    use crate::closed_forms::knuth_sum;
    use crate::kernel_series::slope25_f0_g1;
    use crate::lattice_enum::{count_directed, JumpPolynomial};
    use rug::Rational;

    fn parse(bits: u32, s: &str) -> Float {
        Float::with_val(bits, Float::parse(s).unwrap())
    }

    #[test]
    fn constants_match_published_digits() {
        let prec = Precision::default();
        let p = knuth_constants(prec).unwrap();
        let bits = prec.bits();
        let tol = Float::with_val(bits, 10).pow(-21);
        assert!((Float::with_val(bits, &p.kappa1 - parse(bits, "1.6302576629903501404248"))).abs() < tol);
        assert!((Float::with_val(bits, &p.kappa2 - parse(bits, "0.1586682269720227755147"))).abs() < tol);
        assert!((p.tau2.to_f64() + 0.707723271).abs() < 1e-9);
        let tiny = Float::with_val(bits, 10).pow(-30);
        assert!(p.tau2_annihilator_residual() < tiny);
        assert!(p.kappa1_minpoly_residual() < tiny);
        assert!(p.kappa2_minpoly_residual() < tiny);
        assert!(p.kappa1_mu_residual() < prec.tolerance());
        assert_eq!(eval_int_poly(&KAPPA2_MINPOLY, &Float::new(bits)), -142);
    }

    #[test]
    fn residual_shrinks_with_precision() {
        let lo = kappa2_minpoly_residual(Precision::new(30).unwrap()).unwrap();
        let hi = kappa2_minpoly_residual(Precision::new(60).unwrap()).unwrap();
        assert!(lo < 1e-15);
        assert!(hi < lo || hi.is_zero());
        assert!(knuth_constants(Precision::new(20).unwrap()).is_err());
    }

    fn exact_ab(n: u64) -> (rug::Integer, rug::Integer) {
        let p = JumpPolynomial::down_up(2, 5).unwrap();
        let len = (7 * n - 2) as usize;
        (count_directed(&p, len, 4, Some(1), true).unwrap(), count_directed(&p, len, 3, Some(0), true).unwrap())
    }

    #[test]
    fn two_term_estimates() {
        let prec = Precision::new(40).unwrap();
        let p = knuth_constants(prec).unwrap();
        let mut last = f64::INFINITY;
        for n in [10u64, 20, 40] {
            let (a, b) = exact_ab(n);
            let est = an_bn_asymptotic(n, &p).unwrap();
            let rel_a = (Float::with_val(prec.bits(), &est.a_n / &a) - 1u32).abs().to_f64();
            let rel_b = (Float::with_val(prec.bits(), &est.b_n / &b) - 1u32).abs().to_f64();
            assert!(rel_a < last, "n={n}");
            last = rel_a;
            if n == 40 {
                assert!(rel_a < 0.01 && rel_b < 0.01, "{rel_a} {rel_b}");
            }
        }
        // The refined estimates lose a factor about 4 per doubling of n.
        let refined_err = |n: u64| {
            let (a, b) = exact_ab(n);
            let est = an_bn_asymptotic(n, &p).unwrap();
            let ra = (Float::with_val(prec.bits(), &est.a_n_refined / &a) - 1u32).abs().to_f64();
            let rb = (Float::with_val(prec.bits(), &est.b_n_refined / &b) - 1u32).abs().to_f64();
            ra.max(rb)
        };
        let (e20, e40) = (refined_err(20), refined_err(40));
        assert!(e40 < 1e-3 && e20 / e40 > 3.5, "{e20} {e40}");
        let exact = knuth_sum(50).unwrap();
        let est = an_bn_asymptotic(50, &p).unwrap();
        let rel = (Float::with_val(prec.bits(), &est.sum_first_order / &exact) - 1u32).abs().to_f64();
        assert!(rel < 0.02, "{rel}");
    }

    #[test]
    fn ratio_approaches_kappa() {
        let prec = Precision::new(40).unwrap();
        let p = knuth_constants(prec).unwrap();
        let bits = prec.bits();
        let ratio = |n: u64| {
            let (a, b) = exact_ab(n);
            Float::with_val(bits, Rational::from((a, b)))
        };
        let n = 60u64;
        let predicted = Float::with_val(bits, &p.kappa1 - Float::with_val(bits, &p.kappa2 / n));
        assert!((ratio(n) - predicted).abs() < 1e-3);
        // n (kappa_1 - ratio(n)) -> kappa_2
        let est = |n: u64| (Float::with_val(bits, &p.kappa1 - ratio(n)) * n).to_f64();
        let k2 = p.kappa2.to_f64();
        assert!(((est(60) - k2) / k2).abs() < 0.05);
    }

    #[test]
    fn puiseux_expansions_at_rho() {
        let prec = Precision::default();
        let bits = prec.bits();
        let p = knuth_constants(prec).unwrap();
        let sc = structural_constants(2, 5, prec).unwrap();
        let pu = p.puiseux();
        assert!(pu.c7.is_sign_negative());
        assert!((Float::with_val(bits, &pu.c7 - sc.puiseux_leading())).abs() < prec.tolerance());
        for e in [1e-4f64, 1e-6] {
            let eps = Float::with_val(bits, e);
            let z = Float::with_val(bits, 1u32 - Float::with_val(bits, &eps)) * &sc.rho;
            let u = small_branches_at(2, 5, &Complex::with_val(bits, (&z, 0)), prec).unwrap();
            let (u1, u2) = (u[0].real().clone(), u[1].real().clone());
            let s = Float::with_val(bits, eps.sqrt_ref());
            let e32 = Float::with_val(bits, &s * &eps);
            let fit = Float::with_val(bits, &p.tau + Float::with_val(bits, &pu.c7 * &s)) + Float::with_val(bits, &pu.c7_prime * &e32);
            let resid = Float::with_val(bits, &u1 - fit).abs() / &e32;
            assert!(resid < 10.0 * e.sqrt(), "u1 fit at eps={e}: {}", resid.to_f64());
            let lin = Float::with_val(bits, &u2 - &p.tau2) / &eps;
            assert!((lin - &pu.d7).abs() < 10.0 * e, "u2 slope at eps={e}");
        }
    }

    /// Half-integer Puiseux coefficients of `G_1` at `rho`, from the odd part
    /// `(G(u_1) - G(v_1)) / 2` where `v_1` is the large branch meeting `u_1`.
    fn g1_singular_terms(p: &AsymptoticProfile) -> Vec<PuiseuxTerm> {
        let bits = p.bits();
        let prec = p.precision;
        let g = |u1: &Complex, u2: &Complex, z: &Complex| -> Complex {
            let h = |x: &Complex| Complex::with_val(bits, (&x).pow(6u32));
            (h(u1) - h(u2)) / (Complex::with_val(bits, u1 - u2) * z)
        };
        let odd = |e: f64| -> Float {
            let eps = Float::with_val(bits, e);
            let z = Complex::with_val(bits, (Float::with_val(bits, 1u32 - Float::with_val(bits, &eps)) * &p.rho, 0));
            let roots = kernel_roots_at(2, 5, &z, prec).unwrap();
            let u1 = roots.small.iter().find(|u| u.real().is_sign_positive()).unwrap();
            let u2 = roots.small.iter().find(|u| u.real().is_sign_negative()).unwrap();
            let v1 = roots
                .large
                .iter()
                .min_by(|x, y| {
                    let dx = Float::with_val(bits, (Complex::with_val(bits, *x - &p.tau)).abs_ref());
                    let dy = Float::with_val(bits, (Complex::with_val(bits, *y - &p.tau)).abs_ref());
                    dx.partial_cmp(&dy).unwrap()
                })
                .unwrap();
            let d = (g(u1, u2, &z) - g(v1, u2, &z)) / 2u32;
            d.real().clone() / eps.sqrt()
        };
        // odd(e) = g_{1/2} + g_{3/2} e + O(e^2): two-point fit.
        let (e1, e2) = (1e-12f64, 2e-12f64);
        let (o1, o2) = (odd(e1), odd(e2));
        let g32 = Float::with_val(bits, &o2 - &o1) / (e2 - e1);
        let g12 = o1 - Float::with_val(bits, &g32 * e1);
        vec![
            PuiseuxTerm { exponent: Rational::from((1, 2)), coeff: g12 },
            PuiseuxTerm { exponent: Rational::from((3, 2)), coeff: g32 },
        ]
    }

    #[test]
    fn periodic_extractor_matches_g1() {
        let prec = Precision::default();
        let p = knuth_constants(prec).unwrap();
        let terms = g1_singular_terms(&p);
        let (_, g1) = slope25_f0_g1(7 * 20).unwrap();
        let mut last = f64::INFINITY;
        for n in [5u64, 10, 20] {
            let m = 7 * n - 2;
            let exact = Float::with_val(prec.bits(), g1.coeff(m as usize));
            let approx = local_extractor(&terms, &p.rho, m) * 7u32;
            let rel = (approx / &exact - 1u32).abs().to_f64();
            assert!(rel < last, "n={n}: {rel}");
            last = rel;
            // Off the residue class the coefficient vanishes exactly.
            assert!(g1.coeff(m as usize + 1).cmp0().is_eq());
        }
        assert!(last < 1e-3);
    }
}
