use rug::{Integer, Rational};

/// Generalized binomial coefficient `x (x-1) ... (x-k+1) / k!` for a rational
/// upper index.
pub fn gen_binomial(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::from(1);
    let mut factor = x.clone();
    for j in 1..=k {
        acc *= &factor;
        acc /= j;
        factor -= 1u32;
    }
    acc
}

/// Ordinary binomial coefficient with an integer upper index; zero when
/// `k < 0` or `k > n >= 0`. Negative `n` follows the generalized definition.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 {
        return Integer::new();
    }
    if n >= 0 {
        if k > n {
            return Integer::new();
        }
        return Integer::from(n as u64).binomial(k as u32);
    }
    let r = gen_binomial(&Rational::from(n), k as u64);
    r.into_numer_denom().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn integer_upper_index() {
        assert_eq!(gen_binomial(&q(6, 1), 2), 15);
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(13, 4), 715);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(-1, 3), -1);
    }

    #[test]
    fn empty_and_single_products() {
        assert_eq!(gen_binomial(&q(-7, 3), 0), 1);
        assert_eq!(gen_binomial(&q(3, 2), 1), q(3, 2));
        // (1/2)(-1/2)/2
        assert_eq!(gen_binomial(&q(1, 2), 2), q(-1, 8));
    }

    proptest! {
        #[test]
        fn pascal_type_recurrence(num in -40i64..40, den in 1i64..12, k in 1u64..15) {
            let x = q(num, den);
            let lhs = gen_binomial(&x, k);
            let rhs = gen_binomial(&(x.clone() - 1u32), k - 1) * &x / k;
            prop_assert_eq!(lhs, rhs);
        }
    }
}
