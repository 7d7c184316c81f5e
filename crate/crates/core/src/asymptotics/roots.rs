//! Roots of the kernel `u^a - z (1 + u^{a+c})`, i.e. of the degree `a + c`
//! polynomial `z u^{a+c} - u^a + z`.
//!
//! Simultaneous Aberth iteration at a modest precision locates all roots;
//! Newton's method then polishes them at working precision. A pair of roots
//! that coalesce (as the small and large branch do at the dominant
//! singularities) is refined as a root of the derivative instead, where
//! Newton converges quadratically again.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Assign, Complex, Float};

use super::{check_jumps, structural_constants, Precision};
use crate::error::{Error, Result};

/// Bits used for the global Aberth stage.
const SEARCH_BITS: u32 = 128;

/// All roots of the kernel at `z`, split into the `a` small and `c` large
/// branches.
#[derive(Clone, Debug)]
pub struct KernelRoots {
    pub z: Complex,
    /// Sorted by modulus, then by argument.
    pub small: Vec<Complex>,
    pub large: Vec<Complex>,
}

fn abs(x: &Complex) -> Float {
    Float::with_val(x.prec().0, x.abs_ref())
}

fn kernel_coeffs(a: u64, c: u64, z: &Complex, bits: u32) -> Vec<Complex> {
    let p = (a + c) as usize;
    let mut co = vec![Complex::new(bits); p + 1];
    co[0].assign(z);
    co[p].assign(z);
    co[a as usize] -= 1u32;
    co
}

/// `f(x), f'(x), f''(x)` by Horner's scheme.
fn eval(coeffs: &[Complex], x: &Complex) -> [Complex; 3] {
    let bits = x.prec().0;
    let n = coeffs.len() - 1;
    let mut f = Complex::with_val(bits, &coeffs[n]);
    let mut d1 = Complex::new(bits);
    let mut d2 = Complex::new(bits);
    for k in (0..n).rev() {
        d2 *= x;
        d2 += &d1;
        d1 *= x;
        d1 += &f;
        f *= x;
        f += &coeffs[k];
    }
    [f, d1, d2 * 2u32]
}

/// `sum |c_k| |x|^k`, the natural scale for residuals at `x`.
fn residual_scale(coeffs: &[Complex], x: &Complex) -> Float {
    let bits = x.prec().0;
    let r = abs(x);
    let mut acc = Float::new(bits);
    for c in coeffs.iter().rev() {
        acc *= &r;
        acc += abs(c);
    }
    acc
}

fn initial_guesses(a: u64, c: u64, z: &Complex, bits: u32) -> Vec<Complex> {
    let r = abs(z);
    let theta = Float::with_val(bits, z.arg_ref());
    let two_pi = Float::with_val(bits, Constant::Pi) * 2u32;
    let mut out = Vec::with_capacity((a + c) as usize);
    // u^a ~ z near the small branches and u^c ~ 1/z near the large ones.
    let rs = Float::with_val(bits, (&r).pow(Float::with_val(bits, 1) / a));
    for k in 0..a {
        let ang = (Float::with_val(bits, &theta) + Float::with_val(bits, &two_pi * k)) / a + 0.1f64;
        out.push(Complex::with_val(bits, (Float::new(bits), ang)).exp() * &rs);
    }
    let rl = Float::with_val(bits, (&r).pow(-(Float::with_val(bits, 1) / c)));
    for k in 0..c {
        let ang = (Float::with_val(bits, &two_pi * k) - &theta) / c + 0.1f64;
        out.push(Complex::with_val(bits, (Float::new(bits), ang)).exp() * &rl);
    }
    out
}

fn is_finite(x: &Complex) -> bool {
    x.real().is_finite() && x.imag().is_finite()
}

/// Aberth-Ehrlich iteration, Gauss-Seidel style.
fn aberth(coeffs: &[Complex], mut roots: Vec<Complex>, max_iter: usize) -> Result<Vec<Complex>> {
    let bits = coeffs[0].prec().0;
    let eps = Float::with_val(bits, Float::with_val(bits, 2).pow(-(bits as i32 - 12)));
    // Near a double root the corrections stall well above `eps`; past half
    // precision a stall means we are done and polishing takes over.
    let half = Float::with_val(bits, 2).pow(-(bits as i32 / 2));
    let mut prev = Float::with_val(bits, f64::INFINITY);
    let n = roots.len();
    for _ in 0..max_iter {
        let mut worst = Float::new(bits);
        for i in 0..n {
            let [f, df, _] = eval(coeffs, &roots[i]);
            if f.real().is_zero() && f.imag().is_zero() {
                continue;
            }
            let ratio = Complex::with_val(bits, &f / &df);
            let mut s = Complex::new(bits);
            for (j, rj) in roots.iter().enumerate() {
                if j != i {
                    s += Complex::with_val(bits, &roots[i] - rj).recip();
                }
            }
            let denom = Complex::with_val(bits, 1) - Complex::with_val(bits, &ratio * &s);
            let w = ratio / denom;
            if !is_finite(&w) {
                return Err(Error::RootFinder("non-finite Aberth correction".into()));
            }
            roots[i] -= &w;
            let size = abs(&roots[i]).max(&Float::with_val(bits, 1));
            let rel = abs(&w) / size;
            if rel > worst {
                worst = rel;
            }
        }
        if worst <= eps || (worst <= half && Float::with_val(bits, &worst * 2u32) > prev) {
            break;
        }
        prev = worst;
    }
    Ok(roots)
}

/// Newton's method on `f^{(order)}`.
fn newton(coeffs: &[Complex], mut x: Complex, order: usize) -> Result<Complex> {
    let bits = x.prec().0;
    let eps = Float::with_val(bits, 2).pow(-(bits as i32 - 6));
    for _ in 0..200 {
        let d = eval(coeffs, &x);
        let step = Complex::with_val(bits, &d[order] / &d[order + 1]);
        if !is_finite(&step) {
            return Err(Error::RootFinder("Newton step diverged".into()));
        }
        x -= &step;
        let size = abs(&x).max(&Float::with_val(bits, 1));
        if abs(&step) <= Float::with_val(bits, &eps * &size) {
            return Ok(x);
        }
    }
    Err(Error::RootFinder("Newton polishing did not converge".into()))
}

/// Polishes approximate roots at the precision of `coeffs`. Returns `None`
/// when a suspected double root does not check out, so the caller can search
/// again at higher precision.
fn polish(coeffs: &[Complex], approx: &[Complex], cluster: &Float, tol: &Float) -> Result<Option<Vec<Complex>>> {
    let bits = coeffs[0].prec().0;
    let n = approx.len();
    let close = |i: usize, j: usize| -> bool {
        let d = abs(&Complex::with_val(bits, &approx[i] - &approx[j]));
        let size = abs(&approx[i]).max(&Float::with_val(bits, 1));
        d < Float::with_val(bits, cluster * &size)
    };
    let mut out: Vec<Option<Complex>> = vec![None; n];
    let mut doubles = 0;
    for i in 0..n {
        if out[i].is_some() {
            continue;
        }
        let partners: Vec<usize> = (i + 1..n).filter(|&j| close(i, j)).collect();
        match partners.len() {
            0 => {
                let x = newton(coeffs, Complex::with_val(bits, &approx[i]), 0)?;
                out[i] = Some(x);
            }
            1 => {
                let j = partners[0];
                let mid = Complex::with_val(bits, &approx[i] + &approx[j]) / 2u32;
                let w = newton(coeffs, mid, 1)?;
                let [f, _, _] = eval(coeffs, &w);
                if abs(&f) > Float::with_val(bits, tol * residual_scale(coeffs, &w)) {
                    return Ok(None);
                }
                out[j] = Some(w.clone());
                out[i] = Some(w);
                doubles += 1;
            }
            k => return Err(Error::RootFinder(format!("cluster of {} roots", k + 1))),
        }
    }
    let roots: Vec<Complex> = out.into_iter().map(|r| r.expect("every root assigned")).collect();
    // Newton must not have pulled two simple roots onto the same value.
    let tiny = Float::with_val(bits, tol.sqrt_ref());
    let coincident = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| abs(&Complex::with_val(bits, &roots[i] - &roots[j])) < tiny)
        .count();
    if coincident != doubles {
        return Err(Error::RootFinder("polishing merged two distinct roots".into()));
    }
    for r in &roots {
        let [f, _, _] = eval(coeffs, r);
        if abs(&f) > Float::with_val(bits, tol * residual_scale(coeffs, r)) {
            return Err(Error::RootFinder(format!("residual {} too large", abs(&f).to_f64())));
        }
    }
    Ok(Some(roots))
}

fn all_roots(a: u64, c: u64, z: &Complex, prec: Precision) -> Result<Vec<Complex>> {
    let bits = prec.bits();
    let coeffs = kernel_coeffs(a, c, z, bits);
    let tol = prec.tolerance();
    for search_bits in [SEARCH_BITS.min(bits), bits] {
        let low = kernel_coeffs(a, c, z, search_bits);
        let approx = aberth(&low, initial_guesses(a, c, &Complex::with_val(search_bits, z), search_bits), 2000)?;
        let approx: Vec<Complex> = approx.into_iter().map(|r| Complex::with_val(bits, r)).collect();
        let cluster = Float::with_val(bits, 2).pow(-(search_bits as i32 / 3));
        if let Some(roots) = polish(&coeffs, &approx, &cluster, &tol)? {
            return Ok(roots);
        }
    }
    Err(Error::RootFinder("could not resolve a root cluster".into()))
}

fn cmp_roots(x: &Complex, y: &Complex) -> std::cmp::Ordering {
    let bits = x.prec().0;
    let (mx, my) = (abs(x), abs(y));
    mx.partial_cmp(&my)
        .unwrap()
        .then_with(|| Float::with_val(bits, x.arg_ref()).partial_cmp(&Float::with_val(bits, y.arg_ref())).unwrap())
}

fn classify(a: u64, mut roots: Vec<Complex>, tol: &Float) -> Result<(Vec<Complex>, Vec<Complex>)> {
    roots.sort_by(cmp_roots);
    let a = a as usize;
    let bits = roots[0].prec().0;
    let (last_small, first_large) = (&roots[a - 1], &roots[a]);
    let gap = abs(first_large) - abs(last_small);
    let dist = abs(&Complex::with_val(bits, first_large - last_small));
    let tiny = Float::with_val(bits, tol.sqrt_ref());
    if gap < tiny && dist > tiny {
        return Err(Error::RootFinder(format!(
            "small/large classification ambiguous: |u| = {} for two distinct roots",
            abs(last_small).to_f64()
        )));
    }
    let large = roots.split_off(a);
    Ok((roots, large))
}

/// All `a + c` roots of the kernel at `z`, with the `a` roots of smallest
/// modulus reported as the small branches.
pub fn kernel_roots_at(a: u64, c: u64, z: &Complex, prec: Precision) -> Result<KernelRoots> {
    check_jumps(a, c)?;
    let bits = prec.bits();
    let z = Complex::with_val(bits, z);
    if z.real().is_zero() && z.imag().is_zero() {
        return Err(Error::InvalidArgument("kernel roots at z = 0 are degenerate".into()));
    }
    let sc = structural_constants(a, c, prec)?;
    let bound = Float::with_val(bits, &sc.rho * (Float::with_val(bits, 1) + prec.tolerance()));
    if abs(&z) > bound {
        return Err(Error::InvalidArgument(format!("|z| = {} exceeds rho", abs(&z).to_f64())));
    }
    let roots = all_roots(a, c, &z, prec)?;
    let (small, large) = classify(a, roots, &prec.tolerance())?;
    Ok(KernelRoots { z, small, large })
}

/// Low-precision small roots near a previous set, for continuation.
fn small_roots_low(a: u64, c: u64, z: &Complex, warm: Option<&[Complex]>) -> Result<Vec<Complex>> {
    let coeffs = kernel_coeffs(a, c, z, SEARCH_BITS);
    let start = match warm {
        Some(w) => w.to_vec(),
        None => initial_guesses(a, c, z, SEARCH_BITS),
    };
    let mut roots = aberth(&coeffs, start, 2000)?;
    roots.sort_by(cmp_roots);
    Ok(roots)
}

fn min_separation(xs: &[Complex]) -> Float {
    let mut best = Float::with_val(SEARCH_BITS, f64::INFINITY);
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let d = abs(&Complex::with_val(SEARCH_BITS, &xs[i] - &xs[j]));
            if d < best {
                best = d;
            }
        }
    }
    best
}

/// Index of the nearest candidate and the distance to it.
fn nearest(x: &Complex, candidates: &[Complex]) -> (usize, Float) {
    candidates
        .iter()
        .enumerate()
        .map(|(i, y)| (i, abs(&Complex::with_val(x.prec().0, x - y))))
        .min_by(|p, q| p.1.partial_cmp(&q.1).unwrap())
        .expect("non-empty candidate list")
}

/// Follows the labelled small branches along the segment from `from` to `to`
/// in `steps` equal steps, or fails if a matching becomes ambiguous.
fn continue_along(a: u64, c: u64, from: &Complex, to: &Complex, start: &[Complex], steps: usize) -> Result<Option<Vec<Complex>>> {
    let a_us = a as usize;
    let mut current: Vec<Complex> = start.to_vec();
    let mut all = small_roots_low(a, c, from, None)?;
    for k in 1..=steps {
        let t = Float::with_val(SEARCH_BITS, k) / steps as u64;
        let z = Complex::with_val(SEARCH_BITS, to - from) * t + from;
        all = small_roots_low(a, c, &z, Some(&all))?;
        let small = &all[..a_us];
        let sep = min_separation(small);
        let mut next = Vec::with_capacity(a_us);
        let mut used = vec![false; a_us];
        for u in &current {
            let (i, d) = nearest(u, small);
            if used[i] || d * 4u32 >= sep {
                return Ok(None);
            }
            used[i] = true;
            next.push(small[i].clone());
        }
        current = next;
    }
    Ok(Some(current))
}

/// The small branches `u_1(z), ..., u_a(z)` labelled by analytic
/// continuation along the straight segment from `rho/2`, where `u_i` is the
/// small root closest in argument to `e^{2 pi i (i-1)/a}` (for `a = 2`: `u_1`
/// positive, `u_2` negative).
///
/// This agrees with `u_i(z) = U(e^{2 pi i (i-1)/a} z^{1/a})` on the plane
/// slit along the negative real axis.
pub fn small_branches_at(a: u64, c: u64, z: &Complex, prec: Precision) -> Result<Vec<Complex>> {
    let roots = kernel_roots_at(a, c, z, prec)?;
    let sc = structural_constants(a, c, Precision::new(30)?)?;
    let z0 = Complex::with_val(SEARCH_BITS, (Float::with_val(SEARCH_BITS, &sc.rho) / 2u32, 0));
    let base = small_roots_low(a, c, &z0, None)?;
    let two_pi = Float::with_val(SEARCH_BITS, Constant::Pi) * 2u32;
    let mut labelled = Vec::with_capacity(a as usize);
    for i in 0..a {
        let dir = Complex::with_val(SEARCH_BITS, (Float::new(SEARCH_BITS), Float::with_val(SEARCH_BITS, &two_pi * i) / a)).exp();
        let unit: Vec<Complex> = base.iter().take(a as usize).map(|u| Complex::with_val(SEARCH_BITS, u / abs(u))).collect();
        let (j, _) = nearest(&dir, &unit);
        labelled.push(base[j].clone());
    }
    let target = Complex::with_val(SEARCH_BITS, z);
    let mut steps = 32;
    let tracked = loop {
        if let Some(t) = continue_along(a, c, &z0, &target, &labelled, steps)? {
            break t;
        }
        steps *= 2;
        if steps > 1 << 16 {
            return Err(Error::RootFinder("branch continuation failed to separate the small roots".into()));
        }
    };
    let bits = prec.bits();
    let mut out = Vec::with_capacity(a as usize);
    for u in &tracked {
        let hi: Vec<Complex> = roots.small.iter().map(|r| Complex::with_val(SEARCH_BITS, r)).collect();
        let (i, _) = nearest(u, &hi);
        out.push(Complex::with_val(bits, &roots.small[i]));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::knuth::{eval_int_poly, TAU2_ANNIHILATOR};
    use crate::kernel_series::SmallBranchSymmetrics;

    fn real(prec: Precision, x: &Float) -> Complex {
        Complex::with_val(prec.bits(), (x, 0))
    }

    #[test]
    fn roots_at_rho_for_two_fifths() {
        let prec = Precision::default();
        let sc = structural_constants(2, 5, prec).unwrap();
        let roots = kernel_roots_at(2, 5, &real(prec, &sc.rho), prec).unwrap();
        assert_eq!(roots.small.len(), 2);
        assert_eq!(roots.large.len(), 5);
        let tol = prec.tolerance();
        // tau is a double root: once among the small and once among the large.
        let is_tau = |u: &Complex| abs(&Complex::with_val(prec.bits(), u - &sc.tau)) < tol;
        assert!(roots.small.iter().any(is_tau));
        assert!(roots.large.iter().any(is_tau));
        let tau2 = roots.small.iter().find(|u| u.real().is_sign_negative()).unwrap();
        assert!(tau2.imag().clone().abs() < tol);
        assert!((tau2.real().to_f64() + 0.707723271).abs() < 1e-9);
        let res = eval_int_poly(&TAU2_ANNIHILATOR, tau2.real());
        assert!(res.abs() < 1e-30);
    }

    #[test]
    fn small_roots_solve_the_kernel() {
        let prec = Precision::new(40).unwrap();
        for (a, c) in [(1u64, 1u64), (2, 3), (2, 5), (3, 5), (1, 2)] {
            let sc = structural_constants(a, c, prec).unwrap();
            let z = Complex::with_val(prec.bits(), (Float::with_val(prec.bits(), &sc.rho * 0.6f64), 0.1f64));
            let roots = kernel_roots_at(a, c, &z, prec).unwrap();
            assert_eq!(roots.small.len() as u64, a);
            let max_small = roots.small.iter().map(abs).max_by(|x, y| x.partial_cmp(y).unwrap()).unwrap();
            let min_large = roots.large.iter().map(abs).min_by(|x, y| x.partial_cmp(y).unwrap()).unwrap();
            assert!(max_small < min_large);
        }
    }

    #[test]
    fn elementary_functions_match_series() {
        let prec = Precision::default();
        for (a, c) in [(2u64, 5u64), (2, 3), (3, 5)] {
            let sc = structural_constants(a, c, prec).unwrap();
            let half = Float::with_val(prec.bits(), &sc.rho / 2u32);
            let roots = kernel_roots_at(a, c, &real(prec, &half), prec).unwrap();
            let sym = SmallBranchSymmetrics::new(a, c, 120).unwrap();
            // e_1 and e_a from the numeric roots.
            let e1: Complex = roots.small.iter().fold(Complex::new(prec.bits()), |acc, u| acc + u);
            let ea: Complex = roots.small.iter().fold(Complex::with_val(prec.bits(), 1), |acc, u| acc * u);
            let tol = Float::with_val(prec.bits(), 10).pow(-25);
            let s1 = sym.elementary[0].eval_float(&half);
            let sa = sym.elementary[a as usize - 1].eval_float(&half);
            assert!((Float::with_val(prec.bits(), e1.real() - &s1)).abs() < tol, "e1 for ({a},{c})");
            assert!(e1.imag().clone().abs() < tol);
            assert!((Float::with_val(prec.bits(), ea.real() - &sa)).abs() < tol, "e_a for ({a},{c})");
        }
    }

    #[test]
    fn labelled_branches_at_half_rho() {
        let prec = Precision::new(30).unwrap();
        let sc = structural_constants(2, 5, prec).unwrap();
        let z = real(prec, &Float::with_val(prec.bits(), &sc.rho / 2u32));
        let u = small_branches_at(2, 5, &z, prec).unwrap();
        assert!(u[0].real().is_sign_positive());
        assert!(u[1].real().is_sign_negative());
    }

    #[test]
    fn rejects_points_outside_the_disk() {
        let prec = Precision::new(30).unwrap();
        let z = Complex::with_val(prec.bits(), (0.6f64, 0));
        assert!(kernel_roots_at(2, 5, &z, prec).is_err());
        assert!(kernel_roots_at(2, 5, &Complex::new(prec.bits()), prec).is_err());
    }
}
