use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{binomial_row, factorials, IntPolynomial, PowerSeries};
use crate::error::{Error, Result};

/// Truncated exponential generating function `Σ p_n(x) t^n / n!` whose
/// coefficients are integer polynomials in `x`.
///
/// Slot `n` stores `p_n(x)` itself, i.e. `n!` times the literal `t^n`
/// coefficient. In this scaling the product of two series is the binomial
/// convolution and `d/dt` is a left shift, so everything stays in `Z[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    slots: Vec<IntPolynomial>,
}

impl PolySeries {
    pub fn new(slots: Vec<IntPolynomial>, order: usize) -> Result<Self> {
        if slots.len() != order + 1 {
            return Err(Error::BadLength {
                expected: order + 1,
                got: slots.len(),
            });
        }
        Ok(Self { slots })
    }

    /// Pads with zero slots (or truncates) to `order`.
    pub fn from_slots(mut slots: Vec<IntPolynomial>, order: usize) -> Self {
        slots.resize(order + 1, IntPolynomial::zero());
        Self { slots }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_slots(Vec::new(), order)
    }

    /// `e^t`: every slot is the constant 1.
    pub fn exp_t(order: usize) -> Self {
        Self {
            slots: vec![IntPolynomial::one(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.slots.len() - 1
    }

    pub fn slots(&self) -> &[IntPolynomial] {
        &self.slots
    }

    pub fn slot(&self, n: usize) -> &IntPolynomial {
        &self.slots[n]
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

    pub fn first_mismatch(&self, other: &Self) -> Result<Option<usize>> {
        self.same_order(other)?;
        Ok(self
            .slots
            .iter()
            .zip(&other.slots)
            .position(|(a, b)| a != b))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            slots: self
                .slots
                .iter()
                .zip(&other.slots)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            slots: self
                .slots
                .iter()
                .zip(&other.slots)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Multiplies every slot by a fixed polynomial (a `t`-independent factor).
    pub fn scale(&self, p: &IntPolynomial) -> Self {
        Self {
            slots: self.slots.iter().map(|s| s * p).collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_slots(self.slots.clone(), order)
    }

    /// Series product: `c_n = Σ_k C(n,k) a_k b_{n-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.same_order(other)?;
        let slots = (0..=order)
            .map(|n| {
                let row = binomial_row(n);
                let mut acc = IntPolynomial::zero();
                for (k, c) in row.iter().enumerate() {
                    if !self.slots[k].is_zero() {
                        acc.add_scaled(&(&self.slots[k] * &other.slots[n - k]), c);
                    }
                }
                acc
            })
            .collect();
        Ok(Self { slots })
    }

    /// `exp(self)` from `E' = self' * E`, which in this scaling reads
    /// `e_{n+1} = Σ_k C(n,k) a_{k+1} e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.slots[0].is_zero() {
            return Err(Error::NonzeroConstantTerm("exp"));
        }
        let order = self.order();
        let mut e = Vec::with_capacity(order + 1);
        e.push(IntPolynomial::one());
        for n in 0..order {
            let row = binomial_row(n);
            let mut acc = IntPolynomial::zero();
            for (k, c) in row.iter().enumerate() {
                let a = &self.slots[k + 1];
                if !a.is_zero() {
                    acc.add_scaled(&(a * &e[n - k]), c);
                }
            }
            e.push(acc);
        }
        Ok(Self { slots: e })
    }

    /// Multiplicative inverse. The constant slot must be `±1` so that the
    /// result stays in `Z[x]`.
    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.slots[0];
        let unit = match a0.coeffs() {
            [c] if c.abs().is_one() => c.clone(),
            _ => return Err(Error::NonInvertibleConstant),
        };
        let order = self.order();
        let mut b: Vec<IntPolynomial> = Vec::with_capacity(order + 1);
        b.push(IntPolynomial::constant(unit.clone()));
        for n in 1..=order {
            let row = binomial_row(n);
            let mut acc = IntPolynomial::zero();
            for k in 1..=n {
                if !self.slots[k].is_zero() {
                    acc.add_scaled(&(&self.slots[k] * &b[n - k]), &row[k]);
                }
            }
            // unit^{-1} = unit for ±1
            b.push(acc.scale(&-&unit));
        }
        Ok(Self { slots: b })
    }

    /// `d/dt`: drops slot 0 and shifts the rest down; one order lower.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            slots: self.slots[1..].to_vec(),
        }
    }

    /// Substitutes an integer for `x` and returns the literal rational
    /// series, dividing slot `n` by `n!`.
    pub fn eval_at(&self, x: &BigInt) -> PowerSeries {
        let fact = factorials(self.order());
        PowerSeries::from_coeffs(
            self.slots
                .iter()
                .zip(fact)
                .map(|(p, f)| BigRational::new(p.eval(x), f))
                .collect(),
            self.order(),
        )
    }

    /// Lifts a series with constant (x-free) slots from its literal form.
    /// Fails if some `n! c_n` is not an integer.
    pub fn from_power_series(s: &PowerSeries) -> Option<Self> {
        let slots = s
            .egf_coeffs()
            .into_iter()
            .map(|c| {
                c.is_integer()
                    .then(|| IntPolynomial::constant(c.to_integer()))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self { slots })
    }
}

impl Default for PolySeries {
    fn default() -> Self {
        Self::zero(0)
    }
}
