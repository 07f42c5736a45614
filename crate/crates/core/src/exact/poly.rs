use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Dense univariate polynomial in `x` with arbitrary-precision integer
/// coefficients, stored in ascending order.
///
/// Trailing zero coefficients are never stored, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds a polynomial from small ascending coefficients.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, v: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * v + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// In-place `self += c * other`; used by the binomial sums.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..len)
                .map(|i| {
                    f(
                        self.coeffs.get(i).unwrap_or(&zero),
                        other.coeffs.get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl From<BigInt> for IntPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        &self - &rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

/// Schoolbook product.
impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Ascending coefficients as decimal strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for i in 0..out.len() {
            for j in 0..a.len() {
                if i >= j && i - j < b.len() {
                    out[i] += a[j] * b[i - j];
                }
            }
        }
        out
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), -1);
        assert_eq!(p(&[3]).degree(), 0);
    }

    #[test]
    fn products() {
        assert_eq!(&p(&[0, 1]) * &p(&[0, 1, 1]), p(&[0, 0, 1, 1]));
        assert!((&p(&[1, 2, 3]) * &IntPolynomial::zero()).is_zero());

        let a = [1, 1];
        let b = [0, 1, 14, 36, 24];
        assert_eq!(&p(&a) * &p(&b), p(&convolve(&a, &b)));
        assert_eq!(&p(&a) * &p(&b), p(&[0, 1, 15, 50, 60, 24]));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, 1, 1]).derivative(), p(&[1, 2]));
        assert!(p(&[7]).derivative().is_zero());
        assert!(IntPolynomial::zero().derivative().is_zero());

        let f4 = [0i64, 1, 14, 36, 24];
        let power_rule: Vec<i64> = f4
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| i as i64 * c)
            .collect();
        assert_eq!(p(&f4).derivative(), p(&power_rule));
        assert_eq!(p(&f4).derivative(), p(&[1, 28, 108, 96]));
    }

    #[test]
    fn evaluation() {
        let one = BigInt::one();
        assert_eq!(p(&[0, 1, 7, 6, 1]).eval(&one), BigInt::from(15));
        assert_eq!(p(&[0, 1, 14, 36, 24]).eval(&one), BigInt::from(75));
        assert_eq!(p(&[9, 1, 2]).eval(&BigInt::zero()), BigInt::from(9));
        assert_eq!(IntPolynomial::zero().eval(&one), BigInt::zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 1, 7, 6, 1]).to_string(), "x + 7x^2 + 6x^3 + x^4");
        assert_eq!(p(&[-1, 0, -2]).to_string(), "-1 - 2x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn serializes_as_decimal_strings() {
        let json = serde_json::to_string(&p(&[0, 1, 6, 6])).unwrap();
        assert_eq!(json, r#"["0","1","6","6"]"#);
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-1000i64..1000, 0..8).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn eval_is_multiplicative(a in small_poly(), b in small_poly(), v in -50i64..50) {
            let v = BigInt::from(v);
            prop_assert_eq!((&a * &b).eval(&v), a.eval(&v) * b.eval(&v));
        }

        #[test]
        fn degree_adds(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
        }

        #[test]
        fn add_scaled_matches_ops(a in small_poly(), b in small_poly(), c in -20i64..20) {
            let c = BigInt::from(c);
            let mut acc = a.clone();
            acc.add_scaled(&b, &c);
            prop_assert_eq!(acc, &a + &b.scale(&c));
        }
    }
}
