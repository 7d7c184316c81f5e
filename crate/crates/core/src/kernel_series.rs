//! Kernel method for the two-jump model `P(u) = u^{-a} + u^{c}`.
//!
//! The `a` small roots of `1 - z P(u) = 0` are `u_i(z) = U(w^{i-1} z^{1/a})`
//! with `w` a primitive `a`-th root of unity and `U(x) = x (1 + U^{a+c})^{1/a}`.
//! Power sums of the small roots therefore only need the coefficients of `U`:
//! `sum_i u_i(z)^h = a sum_n [x^{a n}] U(x)^h z^n`. Meander generating
//! functions follow as Schur polynomials in the small roots, evaluated through
//! Newton's identities and the dual Jacobi-Trudi determinant.

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::exactmath::{gen_binomial, jacobi_trudi_schur, newton_e_from_p, TruncatedSeries};

fn check_coprime(a: u64, c: u64) -> Result<()> {
    if a == 0 || c == 0 {
        return Err(Error::InvalidArgument(format!("jumps -{a}/+{c} need a, c >= 1")));
    }
    let g = Integer::from(a).gcd(&Integer::from(c));
    if g != 1 {
        return Err(Error::InvalidArgument(format!("gcd({a}, {c}) = {g}, expected coprime jumps")));
    }
    Ok(())
}

/// `[x^m] U(x)^h` by Lagrange inversion:
/// `(h/m) [u^{m-h}] (1 + u^{a+c})^{m/a}`, which is nonzero only when
/// `m - h` is a multiple of `a + c`.
pub fn lagrange_power_coeff(a: u64, c: u64, h: u64, m: u64) -> Rational {
    if m == 0 {
        return Rational::from(u32::from(h == 0));
    }
    if h == 0 || m < h {
        return Rational::new();
    }
    let p = a + c;
    if (m - h) % p != 0 {
        return Rational::new();
    }
    let k = (m - h) / p;
    gen_binomial(&Rational::from((m, a)), k) * Rational::from((h, m))
}

/// The fundamental branch `U(x)` with `U = x phi(U)`,
/// `phi(u) = (1 + u^{a+c})^{1/a}`, as a series in `x = z^{1/a}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSeries {
    pub a: u64,
    pub c: u64,
    pub u: TruncatedSeries,
}

impl BranchSeries {
    /// Fixed-point iteration `u <- x (1 + u^{a+c})^{1/a}`, expanding the
    /// fractional power as a generalized binomial series.
    pub fn by_fixed_point(a: u64, c: u64, order: usize) -> Result<Self> {
        check_coprime(a, c)?;
        if order == 0 {
            return Err(Error::InvalidArgument("branch series needs order >= 1".into()));
        }
        let p = (a + c) as usize;
        let exponent = Rational::from((1, a));
        let x = TruncatedSeries::monomial(1, order);
        let mut u = x.clone();
        // Each pass fixes at least `p` further coefficients.
        for _ in 0..=order / p + 1 {
            let g = u.pow(p as u32);
            let mut phi = TruncatedSeries::one(order);
            let mut g_pow = TruncatedSeries::one(order);
            for k in 1..=order / p {
                g_pow = &g_pow * &g;
                phi = &phi + &g_pow.scale(&gen_binomial(&exponent, k as u64));
            }
            let next = &x * &phi;
            if next == u {
                break;
            }
            u = next;
        }
        Ok(BranchSeries { a, c, u })
    }

    /// Coefficient-wise construction from the Lagrange inversion formula.
    pub fn by_lagrange(a: u64, c: u64, order: usize) -> Result<Self> {
        check_coprime(a, c)?;
        if order == 0 {
            return Err(Error::InvalidArgument("branch series needs order >= 1".into()));
        }
        let coeffs = (0..=order as u64).map(|m| lagrange_power_coeff(a, c, 1, m)).collect();
        Ok(BranchSeries { a, c, u: TruncatedSeries::new(coeffs) })
    }

    /// Both constructions, cross-checked.
    pub fn new(a: u64, c: u64, order: usize) -> Result<Self> {
        let fixed = Self::by_fixed_point(a, c, order)?;
        let lagrange = Self::by_lagrange(a, c, order)?;
        if fixed != lagrange {
            return Err(Error::Mismatch(format!(
                "fixed-point and Lagrange branch series differ for a={a}, c={c}"
            )));
        }
        Ok(fixed)
    }

    pub fn order(&self) -> usize {
        self.u.order()
    }

    /// `U^a - x^a (1 + U^{a+c})`, which must vanish identically.
    pub fn kernel_residual(&self) -> TruncatedSeries {
        let n = self.order();
        let lhs = self.u.pow(self.a as u32);
        let rhs = (&TruncatedSeries::one(n) + &self.u.pow((self.a + self.c) as u32))
            .shift_up(self.a as usize)
            .truncate(n);
        &lhs - &rhs
    }

    /// `p_h(z) = a sum_n [x^{a n}] U^h z^n` from this series' own
    /// coefficients, up to the largest `z`-order the `x`-order supports.
    pub fn power_sum(&self, h: u32) -> TruncatedSeries {
        let uh = self.u.pow(h);
        let a = self.a as usize;
        let z_order = self.order() / a;
        let coeffs = (0..=z_order).map(|n| Rational::from(uh.coeff(a * n) * self.a)).collect();
        TruncatedSeries::new(coeffs)
    }
}

/// Power sum `sum_{i=1}^{a} u_i(z)^h` of the small branches, to `z`-order
/// `order`, via the Lagrange coefficients of `U^h`.
pub fn power_sum(h: u64, a: u64, c: u64, order: usize) -> Result<TruncatedSeries> {
    check_coprime(a, c)?;
    if h == 0 {
        return Err(Error::InvalidArgument("power sums start at h = 1".into()));
    }
    let coeffs = (0..=order as u64).map(|n| lagrange_power_coeff(a, c, h, a * n) * a).collect();
    Ok(TruncatedSeries::new(coeffs))
}

/// Power sums and elementary symmetric functions of the `a` small branches.
#[derive(Clone, Debug)]
pub struct SmallBranchSymmetrics {
    pub a: u64,
    pub c: u64,
    /// `p_1..p_a`.
    pub power_sums: Vec<TruncatedSeries>,
    /// `e_1..e_a`.
    pub elementary: Vec<TruncatedSeries>,
}

impl SmallBranchSymmetrics {
    pub fn new(a: u64, c: u64, order: usize) -> Result<Self> {
        let power_sums = (1..=a).map(|h| power_sum(h, a, c, order)).collect::<Result<Vec<_>>>()?;
        let elementary = newton_e_from_p(&power_sums);
        Ok(SmallBranchSymmetrics { a, c, power_sums, elementary })
    }
}

/// Generating function, to `z`-order `order`, of meanders with jumps `-a`,
/// `+c` from altitude `h` to altitude `i`:
/// `F_i(z) = (-1)^{a-i-1} / z * s_{(h+1, 1^{a-i-1}, 0^i)}(u_1, ..., u_a)`.
pub fn meander_gf(a: u64, c: u64, h: u64, i: u64, order: usize) -> Result<TruncatedSeries> {
    check_coprime(a, c)?;
    if h < a {
        return Err(Error::InvalidArgument(format!("start altitude {h} below a = {a}")));
    }
    if i >= a {
        return Err(Error::InvalidArgument(format!("end altitude {i} must be below a = {a}")));
    }
    let sym = SmallBranchSymmetrics::new(a, c, order + 1)?;
    let ones = (a - i - 1) as usize;
    let mut lambda = vec![h as u32 + 1];
    lambda.extend(std::iter::repeat(1).take(ones));
    let schur = jacobi_trudi_schur(&lambda, &sym.elementary)?;
    if schur.coeff(0).cmp0().is_ne() {
        return Err(Error::Mismatch(format!(
            "Schur series for lambda={lambda:?} has constant term {}, expected 0",
            schur.coeff(0)
        )));
    }
    let f = schur.shift_down(1)?;
    Ok(if ones % 2 == 1 { -&f } else { f })
}

/// `F_0` (start 3, end 0) and `G_1` (start 4, end 1) for jumps `-2, +5`,
/// through `F_0 = -e_2 h_3 / z` and `G_1 = h_5 / z`, where the complete
/// homogeneous `h_k` of two variables obey `h_k = e_1 h_{k-1} - e_2 h_{k-2}`.
pub fn slope25_f0_g1(order: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    if order < 5 {
        return Err(Error::InvalidArgument("slope-2/5 series need order >= 5".into()));
    }
    let sym = SmallBranchSymmetrics::new(2, 5, order + 1)?;
    let (e1, e2) = (&sym.elementary[0], &sym.elementary[1]);
    let n = order + 1;
    let mut hk = vec![TruncatedSeries::one(n), e1.clone()];
    for k in 2..=5 {
        let next = &(e1 * &hk[k - 1]) - &(e2 * &hk[k - 2]);
        hk.push(next);
    }
    let f0 = -&(e2 * &hk[3]).shift_down(1)?;
    let g1 = hk[5].shift_down(1)?;
    Ok((f0, g1))
}
