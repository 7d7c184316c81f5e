use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Float, Rational};

use crate::error::{Error, Result};

/// A formal power series with exact rational coefficients, known modulo
/// `z^(order + 1)`.
///
/// Binary operations truncate to the smaller of the two orders, so a result
/// never claims more precision than its inputs carry.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients `c_0..=c_N`; the order is `N`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least one coefficient");
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![Rational::new(); order + 1] }
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::from(1), order)
    }

    /// The monomial `z^k`, truncated at `order`.
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = Rational::from(1);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `z^k`; panics when `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(k <= self.order(), "coefficient {k} beyond truncation order {}", self.order());
        &self.coeffs[k]
    }

    pub fn get(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.cmp0().is_eq())
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.cmp0().is_ne())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| Rational::from(c * factor)).collect() }
    }

    /// Multiplies by `z^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::new(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Divides by `z^k`; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::InvalidArgument(format!(
                "cannot divide a series of order {} by z^{k}",
                self.order()
            )));
        }
        if let Some(bad) = self.coeffs[..k].iter().position(|c| c.cmp0().is_ne()) {
            return Err(Error::InvalidArgument(format!(
                "coefficient of z^{bad} is nonzero, cannot divide by z^{k}"
            )));
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.cmp0().is_eq() {
            return Err(Error::NotInvertible);
        }
        let inv0 = Rational::from(c0.recip_ref());
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::new();
            for j in 1..=k {
                acc += Rational::from(&self.coeffs[j] * &out[k - j]);
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative; the order drops by one (order 0 yields the zero
    /// series of order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| Rational::from(c * k as u64)).collect();
        TruncatedSeries { coeffs }
    }

    /// Formal exponential; requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs[0].cmp0().is_ne() {
            return Err(Error::InvalidArgument("exp needs a zero constant term".into()));
        }
        // E' = f' E, so n e_n = sum_{k=1}^{n} k f_k e_{n-k}.
        let n = self.order();
        let mut e: Vec<Rational> = Vec::with_capacity(n + 1);
        e.push(Rational::from(1));
        for m in 1..=n {
            let mut acc = Rational::new();
            for k in 1..=m {
                if self.coeffs[k].cmp0().is_ne() {
                    acc += Rational::from(&self.coeffs[k] * &e[m - k]) * k as u64;
                }
            }
            e.push(acc / m as u64);
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// Formal logarithm; requires constant term one.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != 1 {
            return Err(Error::InvalidArgument("log needs constant term 1".into()));
        }
        // L' = f'/f, integrated termwise.
        let n = self.order();
        let mut l: Vec<Rational> = vec![Rational::new(); n + 1];
        // n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}
        for m in 1..=n {
            let mut acc = Rational::from(&self.coeffs[m] * m as u64);
            for k in 1..m {
                if l[k].cmp0().is_ne() {
                    acc -= Rational::from(&l[k] * &self.coeffs[m - k]) * k as u64;
                }
            }
            l[m] = acc / m as u64;
        }
        Ok(TruncatedSeries { coeffs: l })
    }

    /// Substitutes `z -> -z`.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { Rational::from(-c) } else { c.clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Numeric evaluation of the truncated polynomial at a real point.
    pub fn eval_float(&self, x: &Float) -> Float {
        let prec = x.prec();
        let mut acc = Float::with_val(prec, 0);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += Float::with_val(prec, c);
        }
        acc
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(z^{})", self.order() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n).map(|k| Rational::from(&self.coeffs[k] + &rhs.coeffs[k])).collect();
        TruncatedSeries { coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n).map(|k| Rational::from(&self.coeffs[k] - &rhs.coeffs[k])).collect();
        TruncatedSeries { coeffs }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::new(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.cmp0().is_eq() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if b.cmp0().is_ne() {
                    coeffs[i + j] += Rational::from(a * b);
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| Rational::from(-c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_integers(v.iter().copied())
    }

    #[test]
    fn orders_propagate_as_minimum() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a * &b), s(&[1, 3]));
    }

    #[test]
    fn inverse_of_one_minus_z() {
        let f = s(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(f.inverse().unwrap(), s(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(s(&[0, 1]).inverse(), Err(Error::NotInvertible));
        let g = s(&[2, 3, 5, 7, 11]);
        let prod = &g * &g.inverse().unwrap();
        assert_eq!(prod, TruncatedSeries::one(4));
        assert_eq!(g.checked_div(&g).unwrap(), TruncatedSeries::one(4));
    }

    #[test]
    fn exp_and_log_are_inverse() {
        // exp(z) = sum z^k/k!
        let z = TruncatedSeries::monomial(1, 6);
        let e = z.exp().unwrap();
        let fact: Vec<Rational> = (0..=6u32).map(|k| Rational::from((1, rug::Integer::from(rug::Integer::factorial(k))))).collect();
        assert_eq!(e, TruncatedSeries::new(fact));
        assert_eq!(e.log().unwrap(), z);
        assert!(s(&[2, 1]).log().is_err());
        assert!(s(&[1, 1]).exp().is_err());
    }

    #[test]
    fn shifts() {
        let f = s(&[0, 0, 3, 4]);
        assert_eq!(f.shift_down(2).unwrap(), s(&[3, 4]));
        assert!(f.shift_down(3).is_err());
        assert_eq!(s(&[1, 2]).shift_up(2), s(&[0, 0, 1, 2]));
        assert_eq!(f.valuation(), Some(2));
    }

    #[test]
    fn power_matches_repeated_product() {
        let f = s(&[1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(f.pow(4), s(&[1, 4, 6, 4, 1, 0, 0]));
        assert_eq!(f.pow(0), TruncatedSeries::one(6));
    }

    fn series_strategy(n: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-9i64..9, 1i64..5), n).prop_map(|v| {
            TruncatedSeries::new(v.into_iter().map(|(p, q)| Rational::from((p, q))).collect())
        })
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(a in series_strategy(8), b in series_strategy(8), c in series_strategy(8)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn multiplication_distributes(a in series_strategy(6), b in series_strategy(6), c in series_strategy(6)) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
