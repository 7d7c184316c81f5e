use rug::ops::Pow;
use rug::{Float, Rational};

use crate::exactmath::gen_binomial;

/// One term `coeff * (1 - z/rho)^exponent` of a local expansion.
#[derive(Clone, Debug)]
pub struct PuiseuxTerm {
    pub exponent: Rational,
    pub coeff: Float,
}

/// `sum_j c_j [z^n] (1 - z/rho)^{r_j} = sum_j c_j (-1)^n C(r_j, n) rho^{-n}`.
///
/// The binomial is computed exactly; the result is at the precision of `rho`.
/// For a function with period `p` the caller multiplies by `p`.
pub fn local_extractor(terms: &[PuiseuxTerm], rho: &Float, n: u64) -> Float {
    let bits = rho.prec();
    let scale = Float::with_val(bits, (&rho).pow(-(n as i32)));
    let mut acc = Float::new(bits);
    for t in terms {
        let mut b = gen_binomial(&t.exponent, n);
        if n % 2 == 1 {
            b = -b;
        }
        acc += Float::with_val(bits, &b) * &t.coeff;
    }
    acc * scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Integer;

    fn term(num: i64, den: i64, c: f64) -> PuiseuxTerm {
        PuiseuxTerm { exponent: Rational::from((num, den)), coeff: Float::with_val(200, c) }
    }

    #[test]
    fn elementary_cases() {
        let one = Float::with_val(200, 1);
        assert_eq!(local_extractor(&[term(0, 1, 1.0)], &one, 3), 0);
        assert_eq!(local_extractor(&[term(1, 2, 1.0)], &one, 2), -0.125);
        assert_eq!(local_extractor(&[term(1, 1, 2.0)], &one, 1), -2);
    }

    #[test]
    fn dyck_paths() {
        // D(z) = 2 - 2 sqrt(2) sqrt(1 - 2z) + ..., period 2.
        let bits = 200;
        let rho = Float::with_val(bits, 0.5);
        let c = -Float::with_val(bits, 8).sqrt();
        let terms = [PuiseuxTerm { exponent: Rational::from((1, 2)), coeff: c }];
        for n in 10..=20u64 {
            let cat = Integer::from(Integer::binomial_u(2 * n as u32, n as u32)) / (n + 1);
            let est = local_extractor(&terms, &rho, 2 * n) * 2u32;
            let rel = (est / Float::with_val(bits, &cat) - 1u32).abs().to_f64();
            // The next term of the expansion is of relative size 9/(8n).
            assert!(rel < 1.5 / n as f64, "n={n}: {rel}");
        }
    }
}
