use rug::Rational;

use super::TruncatedSeries;
use crate::error::{Error, Result};

/// Converts power sums `p_1..p_a` into elementary symmetric functions
/// `e_1..e_a` through Newton's identities
/// `k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i`.
pub fn newton_e_from_p(p: &[TruncatedSeries]) -> Vec<TruncatedSeries> {
    let Some(first) = p.first() else {
        return Vec::new();
    };
    let order = p.iter().map(TruncatedSeries::order).min().unwrap_or(first.order());
    // e[0] = 1
    let mut e: Vec<TruncatedSeries> = vec![TruncatedSeries::one(order)];
    for k in 1..=p.len() {
        let mut acc = TruncatedSeries::zero(order);
        for i in 1..=k {
            let term = &e[k - i] * &p[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&Rational::from((1, k as u64))));
    }
    e.remove(0);
    e
}

/// Conjugate partition: `lambda'_j = #{i : lambda_i >= j}`.
pub fn conjugate(lambda: &[u32]) -> Vec<u32> {
    let width = lambda.iter().copied().max().unwrap_or(0);
    (1..=width).map(|j| lambda.iter().filter(|&&l| l >= j).count() as u32).collect()
}

/// Schur polynomial `s_lambda` of `a = e.len()` variables, given their
/// elementary symmetric functions `e_1..e_a` as series.
///
/// Evaluates the dual Jacobi-Trudi determinant
/// `det(e_{lambda'_i - i + j})` over the conjugate partition, with `e_0 = 1`
/// and `e_k = 0` outside `0..=a`. `lambda` is given in row form; trailing
/// zeros are allowed.
pub fn jacobi_trudi_schur(lambda: &[u32], e: &[TruncatedSeries]) -> Result<TruncatedSeries> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(format!("{lambda:?} is not weakly decreasing")));
    }
    let a = e.len();
    let rows = lambda.iter().filter(|&&l| l > 0).count();
    if rows > a {
        return Err(Error::InvalidArgument(format!("partition {lambda:?} has more than {a} parts")));
    }
    let order = e.iter().map(TruncatedSeries::order).min().ok_or_else(|| {
        Error::InvalidArgument("at least one elementary symmetric function is required".into())
    })?;
    let conj = conjugate(lambda);
    let n = conj.len();
    let entry = |idx: i64| -> TruncatedSeries {
        match idx {
            0 => TruncatedSeries::one(order),
            k if k > 0 && (k as usize) <= a => e[k as usize - 1].truncate(order),
            _ => TruncatedSeries::zero(order),
        }
    };
    let matrix: Vec<Vec<TruncatedSeries>> = (0..n)
        .map(|i| (0..n).map(|j| entry(conj[i] as i64 - i as i64 + j as i64)).collect())
        .collect();
    if n == 0 {
        return Ok(TruncatedSeries::one(order));
    }
    Ok(determinant(&matrix))
}

/// Determinant of a square matrix of series by the Faddeev-LeVerrier
/// recurrence, which only divides by integers.
///
/// Panics on an empty or non-square matrix.
pub fn determinant(matrix: &[Vec<TruncatedSeries>]) -> TruncatedSeries {
    let n = matrix.len();
    assert!(n > 0 && matrix.iter().all(|row| row.len() == n), "determinant needs a square matrix");
    let order = matrix.iter().flatten().map(TruncatedSeries::order).min().unwrap_or(0);
    let zero = TruncatedSeries::zero(order);

    let mul = |x: &[Vec<TruncatedSeries>], y: &[Vec<TruncatedSeries>]| -> Vec<Vec<TruncatedSeries>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = zero.clone();
                        for (k, yk) in y.iter().enumerate() {
                            if !x[i][k].is_zero() && !yk[j].is_zero() {
                                acc = &acc + &(&x[i][k] * &yk[j]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    };

    let mut m: Vec<Vec<TruncatedSeries>> = vec![vec![zero.clone(); n]; n];
    let mut coeff = TruncatedSeries::one(order);
    for k in 1..=n {
        let mut next = mul(matrix, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = &row[i] + &coeff;
        }
        m = next;
        let am = mul(matrix, &m);
        let mut trace = zero.clone();
        for (i, row) in am.iter().enumerate() {
            trace = &trace + &row[i];
        }
        coeff = trace.scale(&Rational::from((-1, k as u64)));
    }
    if n % 2 == 1 {
        -&coeff
    } else {
        coeff
    }
}
