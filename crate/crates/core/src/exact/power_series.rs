use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factorials;
use crate::error::{Error, Result};

/// Truncated formal power series `c_0 + c_1 t + ... + c_order t^order` with
/// exact rational coefficients.
///
/// Coefficients are the literal `t^n` coefficients. For an exponential
/// generating function `Σ a_n t^n / n!` that means `c_n = a_n / n!`; use
/// [`PowerSeries::from_egf`] and [`PowerSeries::egf_coeffs`] to cross the
/// factorial scaling explicitly.
///
/// Binary operations require equal truncation orders and fail with
/// [`Error::OrderMismatch`] otherwise.
#[derive(Clone, Debug)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PowerSeries {
    /// `coeffs` must hold exactly `order + 1` entries.
    pub fn new(coeffs: Vec<BigRational>, order: usize) -> Result<Self> {
        if coeffs.len() != order + 1 {
            return Err(Error::BadLength {
                expected: order + 1,
                got: coeffs.len(),
            });
        }
        Ok(Self { coeffs })
    }

    /// Pads with zeros (or truncates) to `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[BigInt], order: usize) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
            order,
        )
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    /// Series with `c_n = a_n / n!`.
    pub fn from_egf(terms: &[BigInt], order: usize) -> Self {
        let fact = factorials(order);
        Self::from_coeffs(
            terms
                .iter()
                .zip(&fact)
                .map(|(a, f)| BigRational::new(a.clone(), f.clone()))
                .collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_i64s(&[1], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::from_i64s(&[0, 1], order)
    }

    /// `e^{c t}`.
    pub fn exp_linear(c: i64, order: usize) -> Self {
        let fact = factorials(order);
        let c = BigInt::from(c);
        let mut pow = BigInt::one();
        let mut coeffs = Vec::with_capacity(order + 1);
        for f in &fact {
            coeffs.push(BigRational::new(pow.clone(), f.clone()));
            pow *= &c;
        }
        Self { coeffs }
    }

    /// `1 / (1 - t)`.
    pub fn geometric(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::one(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    /// `n! * c_n` for every slot, i.e. the sequence whose EGF this is.
    pub fn egf_coeffs(&self) -> Vec<BigRational> {
        let fact = factorials(self.order());
        self.coeffs
            .iter()
            .zip(fact)
            .map(|(c, f)| c * BigRational::from_integer(f))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    fn same_order(&self, other: &Self) -> Result<usize> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(self.order())
    }

    /// Coefficient-wise equality; orders must agree.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        Ok(self.first_mismatch(other)?.is_none())
    }

    /// Index of the first differing coefficient.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<usize>> {
        self.same_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.same_order(other)?;
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self { coeffs })
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `self(inner(t))`, evaluated by Horner's rule on series.
    ///
    /// `inner` must have zero constant term, otherwise every output
    /// coefficient depends on infinitely many input coefficients.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let order = self.same_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm("composition"));
        }
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `exp(self)` from `E' = self' * E`, so that
    /// `n e_n = Σ_{k=1..n} k a_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm("exp"));
        }
        let order = self.order();
        let mut e = Vec::with_capacity(order + 1);
        e.push(BigRational::one());
        for n in 1..=order {
            let mut s = BigRational::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    s += a * rat(k as i64) * &e[n - k];
                }
            }
            e.push(s / rat(n as i64));
        }
        Ok(Self { coeffs: e })
    }

    /// Multiplicative inverse at the same order.
    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonInvertibleConstant);
        }
        let inv0 = a0.recip();
        let order = self.order();
        let mut b: Vec<BigRational> = Vec::with_capacity(order + 1);
        b.push(inv0.clone());
        for n in 1..=order {
            let mut s = BigRational::zero();
            for k in 1..=n {
                s += &self.coeffs[k] * &b[n - k];
            }
            b.push(-s * &inv0);
        }
        Ok(Self { coeffs: b })
    }

    /// `d/dt`, one order lower. An order-0 input gives the order-0 zero
    /// series.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        }
    }
}
