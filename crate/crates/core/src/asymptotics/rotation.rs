//! The rotation law of the small branches: with `p = a + c`,
//! `omega = e^{2 pi i / p}` and `kappa a + 1 = 0 mod p`, the multiset
//! `{omega^kappa u_i(omega z)}` equals `{u_i(z)}`.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

use super::{check_jumps, kernel_roots_at, small_branches_at, structural_constants, Precision};
use crate::error::{Error, Result};

/// The exponent `kappa` in `0..p` with `kappa a + 1 = 0 mod a + c`.
pub fn rotation_kappa(a: u64, c: u64) -> Result<u64> {
    check_jumps(a, c)?;
    let p = a + c;
    (0..p).find(|k| (k * a + 1) % p == 0).ok_or_else(|| Error::InvalidArgument(format!("no kappa for ({a}, {c})")))
}

/// Outcome of [`rotation_law_check`].
#[derive(Clone, Debug)]
pub struct RotationReport {
    pub a: u64,
    pub c: u64,
    pub kappa: u64,
    pub samples: usize,
    /// Largest distance between `omega^kappa u(omega z)` and the matched
    /// `u(z)`, over all samples and branches.
    pub max_deviation: Float,
    /// `sigma` with `omega^kappa u_i(omega z) = u_{sigma(i)}(z)` for the
    /// labelled branches (0-based), identical for every sample.
    pub permutation: Vec<usize>,
    /// Largest deviation along that fixed permutation.
    pub pairing_deviation: Float,
}

impl RotationReport {
    pub fn holds(&self, tol: &Float) -> bool {
        self.max_deviation < *tol && self.pairing_deviation < *tol
    }
}

/// `count` deterministic points with `|z| < rho` and
/// `0 < arg z < pi - 2 pi / p`.
pub fn rotation_samples(a: u64, c: u64, count: usize, prec: Precision) -> Result<Vec<Complex>> {
    let sc = structural_constants(a, c, prec)?;
    let bits = prec.bits();
    let pi = Float::with_val(bits, Constant::Pi);
    let max_arg = Float::with_val(bits, &pi - Float::with_val(bits, &pi * 2u32) / (a + c));
    Ok((0..count)
        .map(|k| {
            let frac = (2 * k + 1) as f64 / (2 * count) as f64;
            let radius = 0.2 + 0.75 * ((k * 7) % count) as f64 / count as f64;
            let ang = Float::with_val(bits, &max_arg * frac);
            let r = Float::with_val(bits, &sc.rho * radius);
            Complex::with_val(bits, (Float::new(bits), ang)).exp() * r
        })
        .collect())
}

fn dist(x: &Complex, y: &Complex) -> Float {
    let d = Complex::with_val(x.prec().0, x - y);
    Float::with_val(x.prec().0, d.abs_ref())
}

/// Best matching of two equal-size lists by exhaustive search over
/// permutations; returns the permutation and its largest pair distance.
fn best_matching(left: &[Complex], right: &[Complex]) -> (Vec<usize>, Float) {
    fn rec(left: &[Complex], right: &[Complex], used: &mut Vec<bool>, cur: &mut Vec<usize>, best: &mut Option<(Vec<usize>, Float)>) {
        let i = cur.len();
        if i == left.len() {
            let worst = (0..i).map(|k| dist(&left[k], &right[cur[k]])).max_by(|x, y| x.partial_cmp(y).unwrap());
            let worst = worst.unwrap_or_else(|| Float::new(64));
            if best.as_ref().map_or(true, |(_, b)| worst < *b) {
                *best = Some((cur.clone(), worst));
            }
            return;
        }
        for j in 0..right.len() {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                rec(left, right, used, cur, best);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut best = None;
    rec(left, right, &mut vec![false; right.len()], &mut Vec::new(), &mut best);
    best.expect("at least one permutation")
}

/// Checks the rotation law at each sample `z`, both as a multiset identity
/// on the small roots and as a fixed permutation of the labelled branches.
pub fn rotation_law_check(a: u64, c: u64, samples: &[Complex], prec: Precision) -> Result<RotationReport> {
    let kappa = rotation_kappa(a, c)?;
    let sc = structural_constants(a, c, prec)?;
    let bits = prec.bits();
    let pi = Float::with_val(bits, Constant::Pi);
    let max_arg = Float::with_val(bits, &pi - Float::with_val(bits, &pi * 2u32) / (a + c));
    let wk = Complex::with_val(bits, (&sc.omega).pow(kappa as u32));
    let mut max_dev = Float::new(bits);
    let mut pair_dev = Float::new(bits);
    let mut permutation: Option<Vec<usize>> = None;
    for z in samples {
        let arg = Float::with_val(bits, z.arg_ref());
        if arg.cmp0().is_none_or(|o| o.is_le()) || arg >= max_arg {
            return Err(Error::InvalidArgument(format!("sample argument {} outside (0, pi - 2 pi/p)", arg.to_f64())));
        }
        let wz = Complex::with_val(bits, z * &sc.omega);
        let rotate = |us: Vec<Complex>| -> Vec<Complex> { us.into_iter().map(|u| u * &wk).collect() };

        let here = kernel_roots_at(a, c, z, prec)?.small;
        let there = rotate(kernel_roots_at(a, c, &wz, prec)?.small);
        let (_, dev) = best_matching(&there, &here);
        max_dev = max_dev.max(&dev);

        let here = small_branches_at(a, c, z, prec)?;
        let there = rotate(small_branches_at(a, c, &wz, prec)?);
        let (sigma, _) = best_matching(&there, &here);
        match &permutation {
            None => permutation = Some(sigma.clone()),
            Some(p) if *p != sigma => {
                return Err(Error::Mismatch(format!("branch permutation changed from {p:?} to {sigma:?}")))
            }
            _ => {}
        }
        let sigma = permutation.as_ref().expect("set above");
        for (i, u) in there.iter().enumerate() {
            pair_dev = pair_dev.max(&dist(u, &here[sigma[i]]));
        }
    }
    Ok(RotationReport {
        a,
        c,
        kappa,
        samples: samples.len(),
        max_deviation: max_dev,
        permutation: permutation.unwrap_or_default(),
        pairing_deviation: pair_dev,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_values() {
        assert_eq!(rotation_kappa(2, 5).unwrap(), 3);
        assert_eq!(rotation_kappa(2, 3).unwrap(), 2);
        assert_eq!(rotation_kappa(1, 1).unwrap(), 1);
        for (a, c) in [(3u64, 5u64), (3, 7), (4, 5), (1, 6)] {
            let k = rotation_kappa(a, c).unwrap();
            assert_eq!((k * a + 1) % (a + c), 0);
        }
    }

    #[test]
    fn two_fifths_swaps_the_branches() {
        let prec = Precision::default();
        let samples = rotation_samples(2, 5, 3, prec).unwrap();
        let r = rotation_law_check(2, 5, &samples, prec).unwrap();
        assert_eq!(r.permutation, vec![1, 0]);
        assert!(r.holds(&Float::with_val(prec.bits(), 10).pow(-30)));
        let bad = [Complex::with_val(prec.bits(), (-0.1f64, 0.01f64))];
        assert!(rotation_law_check(2, 5, &bad, prec).is_err());
    }

    #[test]
    fn three_fifths() {
        let prec = Precision::new(40).unwrap();
        let samples = rotation_samples(3, 5, 2, prec).unwrap();
        let r = rotation_law_check(3, 5, &samples, prec).unwrap();
        assert_eq!(r.kappa, 5);
        assert!(r.holds(&prec.tolerance()));
    }
}
