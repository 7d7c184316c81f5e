//! Closed-form binomial expressions for lattice paths below a rational line,
//! each paired in the tests with the dynamic-programming oracle of
//! [`crate::lattice_enum`].

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, gen_binomial, partitions, TruncatedSeries};

fn gcd(a: u64, b: u64) -> u64 {
    Integer::from(a).gcd(&Integer::from(b)).to_u64().expect("gcd fits")
}

fn to_integer(r: Rational, what: &str) -> Result<Integer> {
    if *r.denom() != 1 {
        return Err(Error::NotIntegral(format!("{what} = {r}")));
    }
    Ok(r.into_numer_denom().0)
}

/// `C(a+b, a) / (a+b)`: the number of North/East paths from the origin to
/// `(b, a)` weakly below the diagonal, for coprime `a, b`.
///
/// A non-integral value (only possible when `gcd(a, b) > 1`) is an error.
pub fn rational_catalan(a: u64, b: u64) -> Result<Integer> {
    if a + b == 0 {
        return Err(Error::InvalidArgument("rational Catalan number needs a + b > 0".into()));
    }
    let n = a + b;
    let r = Rational::from((binomial(n as i64, a as i64), Integer::from(n)));
    to_integer(r, &format!("Cat({a}, {b})"))
}

/// `c_j = C((a+b) j, a j) / ((a+b) j)` for `j = 1..=n`, index 0 unused.
fn bizley_terms(a: u64, b: u64, n: usize) -> Vec<Rational> {
    let mut c = vec![Rational::new(); n + 1];
    for (j, cj) in c.iter_mut().enumerate().skip(1) {
        let m = (a + b) as i64 * j as i64;
        *cj = Rational::from((binomial(m, a as i64 * j as i64), Integer::from(m)));
    }
    c
}

/// `f(a k, b k)` for `k = 0..=n`: paths to `(b k, a k)` weakly below the
/// line of slope `a/b`, as the coefficients of `exp(sum_j c_j t^j)`.
pub fn bizley_series(a: u64, b: u64, n: usize) -> Result<Vec<Integer>> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!("Bizley series needs a, b >= 1, got ({a}, {b})")));
    }
    if gcd(a, b) != 1 {
        return Err(Error::InvalidArgument(format!("Bizley series needs coprime a, b, got ({a}, {b})")));
    }
    let e = TruncatedSeries::new(bizley_terms(a, b, n)).exp()?;
    e.into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(k, v)| to_integer(v, &format!("f({}, {})", a * k as u64, b * k as u64)))
        .collect()
}

/// `f(a n, b n)` as the partition sum `sum prod_j c_j^{e_j} / e_j!` over all
/// multiplicity vectors with `sum_j j e_j = n`.
pub fn grossman_sum(a: u64, b: u64, n: usize) -> Result<Integer> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!("Grossman sum needs a, b >= 1, got ({a}, {b})")));
    }
    let c = bizley_terms(a, b, n);
    let mut total = Rational::new();
    for part in partitions(n) {
        let mut term = Rational::from(1);
        for (j, &e) in part.multiplicities().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut pw = Rational::from(1);
            for _ in 0..e {
                pw *= &c[j + 1];
            }
            term *= pw / Integer::from(Integer::factorial(e));
        }
        total += term;
    }
    to_integer(total, &format!("Grossman sum ({a}, {b}, {n})"))
}

/// `A_n + B_n = 2/(7n-1) C(7n-1, 2n)`: walks with jumps `-2, +5` of length
/// `7n - 2` from altitude 4 to 1 plus those from 3 to 0.
pub fn knuth_sum(n: u64) -> Result<Integer> {
    if n == 0 {
        return Err(Error::InvalidArgument("knuth_sum needs n >= 1".into()));
    }
    let m = 7 * n as i64 - 1;
    let r = Rational::from((binomial(m, 2 * n as i64) * 2u32, Integer::from(m)));
    to_integer(r, "knuth sum")
}

/// The hypergeometric ratio `C_{n+1} / C_n` of [`knuth_sum`].
pub fn knuth_ratio(n: u64) -> Rational {
    let n = n as i64;
    let num: i64 = [7 * n + 5, 7 * n + 4, 7 * n + 3, 7 * n + 2, 7 * n + 1, 7 * n - 1].iter().product();
    let den: i64 = [5 * n + 4, 5 * n + 3, 5 * n + 2, 5 * n + 1, 2 * n + 1, n + 1].iter().product();
    Rational::from((7, 10)) * Rational::from((num, den))
}

/// Whether `C_{n+1} = knuth_ratio(n) C_n` holds exactly.
pub fn recurrence_check(n: u64) -> Result<bool> {
    let cn = knuth_sum(n)?;
    let next = knuth_sum(n + 1)?;
    Ok(Rational::from(next) == knuth_ratio(n) * cn)
}

/// The lattice points `(c s - r_a, a s + r_c)` on `y = (a x + b)/c`.
///
/// The representative `(r_a, r_c)` is shifted so that the first index with
/// non-negative coordinates is `s = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StartingPointFamily {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub r_a: i64,
    pub r_c: i64,
}

impl StartingPointFamily {
    /// `max(ceil(r_a / c), ceil(-r_c / a))`, which is 0 for the normalized
    /// representative.
    pub fn s0(&self) -> i64 {
        let ceil = |p: i64, q: i64| -> i64 { -((-p).div_euclid(q)) };
        ceil(self.r_a, self.c as i64).max(ceil(-self.r_c, self.a as i64))
    }

    pub fn point(&self, s: i64) -> (i64, i64) {
        (self.c as i64 * s - self.r_a, self.a as i64 * s + self.r_c)
    }

    /// The same family, reindexed with another representative.
    pub fn shifted(&self, t: i64) -> Self {
        StartingPointFamily { r_a: self.r_a + self.c as i64 * t, r_c: self.r_c - self.a as i64 * t, ..*self }
    }
}

/// Lattice points on `y = (a x + b)/c` via the extended Euclidean algorithm.
///
/// Fails with [`Error::NoSolution`] when `gcd(a, c)` does not divide `b`.
pub fn starting_points(a: u64, b: u64, c: u64) -> Result<StartingPointFamily> {
    if a == 0 || c == 0 {
        return Err(Error::InvalidArgument(format!("slope ({a}, {b}, {c}) needs a, c >= 1")));
    }
    let g = gcd(a, c);
    if b % g != 0 {
        return Err(Error::NoSolution { a, b, c, g });
    }
    let (a, b, c) = (a / g, b / g, c / g);
    let (_, x, y) = Integer::from(a).extended_gcd(Integer::from(c), Integer::new());
    let r_a = (x * b).to_i64().ok_or_else(|| Error::InvalidArgument("coefficients overflow".into()))?;
    let r_c = (y * b).to_i64().ok_or_else(|| Error::InvalidArgument("coefficients overflow".into()))?;
    let raw = StartingPointFamily { a, b, c, r_a, r_c };
    Ok(raw.shifted(-raw.s0()))
}

fn family_point(a: u64, b: u64, c: u64, s: i64) -> Result<(StartingPointFamily, (i64, i64))> {
    let fam = starting_points(a, b, c)?;
    if s < fam.s0() {
        return Err(Error::InvalidArgument(format!("s = {s} below the first index {}", fam.s0())));
    }
    let q = fam.point(s);
    Ok((fam, q))
}

/// `int_0^1 |W_t| dt = (b/c) / (q_1 + q_2) C(q_1 + q_2, q_2)` for the `s`-th
/// starting point `(q_1, q_2)` on the line.
pub fn naka_integral(a: u64, b: u64, c: u64, s: i64) -> Result<Rational> {
    let (fam, (q1, q2)) = family_point(a, b, c, s)?;
    let n = q1 + q2;
    if n == 0 {
        return Ok(Rational::new());
    }
    Ok(Rational::from((binomial(n, q2) * fam.b, Integer::from(fam.c) * n)))
}

/// `sum_{k=1}^{b} A_s(k) = b / (q_1 + q_2) C(q_1 + q_2, q_2)`, where `A_s(k)`
/// counts paths to `(q_1, q_2 - 1)` strictly below `y = (a x + k)/c`.
pub fn general_slope_sum(a: u64, b: u64, c: u64, s: i64) -> Result<Integer> {
    let (fam, _) = family_point(a, b, c, s)?;
    let r = naka_integral(a, b, c, s)? * fam.c;
    to_integer(r, "general slope sum")
}

/// `sum_{k = l a + 1}^{(l+1) a} A_s(k) = (l a + c)/((a+c) s + l - 1)
/// C((a+c) s + l - 1, a s - 1)`, with `A_s(k)` counting paths to
/// `(c s - 1, a s - 1)` strictly below `y = (a x + k)/c`.
pub fn general_sum(a: u64, c: u64, l: u64, s: u64) -> Result<Integer> {
    if a == 0 || a >= c || gcd(a, c) != 1 || (l + 1) * a >= c || s == 0 {
        return Err(Error::InvalidArgument(format!(
            "general_sum needs 0 < a < c coprime, (l+1) a < c, s >= 1; got a={a}, c={c}, l={l}, s={s}"
        )));
    }
    let m = ((a + c) * s + l - 1) as i64;
    let r = Rational::from((binomial(m, (a * s) as i64 - 1) * (l * a + c), Integer::from(m)));
    to_integer(r, "general sum")
}

/// `T(z)^r` for the tree function `T = 1 + z T^t`:
/// `[z^k] = C(t k + r, k) r / (t k + r)`.
pub fn tree_series(t: &Rational, r: &Rational, order: usize) -> Result<TruncatedSeries> {
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let top = Rational::from(t * k as u64) + r;
        if top.cmp0().is_eq() {
            return Err(Error::InvalidArgument(format!("t k + r vanishes at k = {k}")));
        }
        coeffs.push(gen_binomial(&top, k as u64) * r / top);
    }
    Ok(TruncatedSeries::new(coeffs))
}

/// Checks `ln T(z) = sum_{n >= 1} C(t n, n)/(t n) z^n` coefficient-wise.
pub fn log_tree_identity_check(t: &Rational, order: usize) -> Result<bool> {
    if t.cmp0().is_eq() {
        return Err(Error::InvalidArgument("log tree identity needs t != 0".into()));
    }
    let lhs = tree_series(t, &Rational::from(1), order)?.log()?;
    Ok((1..=order).all(|n| {
        let tn = Rational::from(t * n as u64);
        let rhs = gen_binomial(&tn, n as u64) / &tn;
        *lhs.coeff(n) == rhs
    }))
}

/// Checks that for `t = 3/2`, `T(z) T(-z)` is even with
/// `[z^{2n}] = C(3n+1, n)/(n+1)`.
pub fn half_tree_product_check(order: usize) -> Result<bool> {
    let t = tree_series(&Rational::from((3, 2)), &Rational::from(1), order)?;
    let prod = &t * &t.negate_variable();
    Ok((0..=order).all(|k| {
        let c = prod.coeff(k);
        if k % 2 == 1 {
            return c.cmp0().is_eq();
        }
        let n = (k / 2) as i64;
        *c == Rational::from((binomial(3 * n + 1, n), Integer::from(n + 1)))
    }))
}
