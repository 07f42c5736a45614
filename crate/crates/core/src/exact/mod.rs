//! Exact arithmetic substrate.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`; the
//! polynomial and series types on top of them are local.

mod poly;
mod poly_series;
mod power_series;

pub use poly::IntPolynomial;
pub use poly_series::PolySeries;
pub use power_series::PowerSeries;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeBinomial(n));
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by i + 1 at this point.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}

/// Row `n` of Pascal's triangle, `C(n, 0) ..= C(n, n)`.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(c.clone());
    }
    row
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `0!, 1!, ..., n!`
pub(crate) fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut f = BigInt::one();
    out.push(f.clone());
    for i in 1..=n {
        f *= BigInt::from(i);
        out.push(f.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
        let mut tri: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=rows {
            let prev = &tri[n - 1];
            let mut row = vec![BigInt::one()];
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            tri.push(row);
        }
        tri
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        for n in 0..10 {
            assert_eq!(binomial(n, 0).unwrap(), BigInt::one());
        }
        assert_eq!(binomial(5, -1).unwrap(), BigInt::zero());
        assert_eq!(binomial(5, 6).unwrap(), BigInt::zero());
        assert_eq!(binomial(0, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn negative_n_is_rejected() {
        assert_eq!(binomial(-1, 0), Err(Error::NegativeBinomial(-1)));
    }

    #[test]
    fn matches_additive_pascal_triangle() {
        let tri = pascal(60);
        assert_eq!(binomial(60, 30).unwrap(), tri[60][30]);
        assert_eq!(tri[60][30].to_string(), "118264581564861424");
        for (n, row) in tri.iter().enumerate() {
            assert_eq!(&binomial_row(n), row);
            for (k, c) in row.iter().enumerate() {
                assert_eq!(&binomial(n as i64, k as i64).unwrap(), c);
            }
        }
    }

    #[test]
    fn factorial_table() {
        let f = factorials(20);
        assert_eq!(f[0], BigInt::one());
        assert_eq!(f[20].to_string(), "2432902008176640000");
        assert_eq!(factorial(20), f[20]);
    }
}
