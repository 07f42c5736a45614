//! Stirling numbers of the second kind and the exponential (Bell) and
//! geometric (Fubini) numbers and polynomials built from them.
//!
//! * `φ_n(x) = Σ_k S(n,k) x^k`, `φ_n = φ_n(1)`
//! * `F_n(x) = Σ_k S(n,k) k! x^k`, `F_n = F_n(1)`

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::exact::IntPolynomial;

/// Rows of the Stirling triangle computed so far. Rows are only ever
/// appended, so readers see a consistent prefix.
static TRIANGLE: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();

fn triangle() -> &'static RwLock<Vec<Vec<BigInt>>> {
    TRIANGLE.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

/// Row `n` of the Stirling triangle, `S(n,0) ..= S(n,n)`, from
/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling_row(n: usize) -> Vec<BigInt> {
    {
        let rows = triangle().read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = rows.get(n) {
            return row.clone();
        }
    }
    let mut rows = triangle().write().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n {
        let prev = rows.last().expect("triangle is seeded with row 0");
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        row.push(BigInt::zero());
        for k in 1..m {
            row.push(&prev[k] * BigInt::from(k) + &prev[k - 1]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows[n].clone()
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling_row(n).swap_remove(k)
}

pub fn bell_polynomial(n: usize) -> IntPolynomial {
    IntPolynomial::new(stirling_row(n))
}

pub fn bell_number(n: usize) -> BigInt {
    stirling_row(n).iter().sum()
}

pub fn fubini_polynomial(n: usize) -> IntPolynomial {
    let mut fact = BigInt::one();
    let coeffs = stirling_row(n)
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            if k > 0 {
                fact *= BigInt::from(k);
            }
            s * &fact
        })
        .collect();
    IntPolynomial::new(coeffs)
}

pub fn fubini_number(n: usize) -> BigInt {
    fubini_polynomial(n).coeffs().iter().sum()
}

/// Replaces `x^k` by `k! x^k`.
///
/// Since `∫_0^∞ λ^k e^{-λ} dλ = k!`, this is `∫_0^∞ p(xλ) e^{-λ} dλ`
/// evaluated term by term; it maps `φ_n(x)` to `F_n(x)`.
pub fn gamma_transform(p: &IntPolynomial) -> IntPolynomial {
    let mut fact = BigInt::one();
    IntPolynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    fact *= BigInt::from(k);
                }
                c * &fact
            })
            .collect(),
    )
}

/// Which sequence seeds an Euler-Seidel table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    /// `S(n, m)` for fixed column `m`, indexed by `n`.
    Stirling2(usize),
    BellNumber,
    BellPoly,
    FubiniNumber,
    FubiniPoly,
}

impl SeqKind {
    pub fn is_polynomial(self) -> bool {
        matches!(self, SeqKind::BellPoly | SeqKind::FubiniPoly)
    }

    pub fn term(self, n: usize) -> Term {
        match self {
            SeqKind::Stirling2(m) => Term::Number(stirling2(n, m)),
            SeqKind::BellNumber => Term::Number(bell_number(n)),
            SeqKind::BellPoly => Term::Poly(bell_polynomial(n)),
            SeqKind::FubiniNumber => Term::Number(fubini_number(n)),
            SeqKind::FubiniPoly => Term::Poly(fubini_polynomial(n)),
        }
    }

    /// Terms `0..count`.
    pub fn terms(self, count: usize) -> Vec<Term> {
        (0..count).map(|n| self.term(n)).collect()
    }

    pub fn numbers(self, count: usize) -> Option<Vec<BigInt>> {
        self.terms(count)
            .into_iter()
            .map(|t| match t {
                Term::Number(v) => Some(v),
                Term::Poly(_) => None,
            })
            .collect()
    }

    pub fn polynomials(self, count: usize) -> Option<Vec<IntPolynomial>> {
        self.terms(count)
            .into_iter()
            .map(|t| match t {
                Term::Poly(p) => Some(p),
                Term::Number(_) => None,
            })
            .collect()
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqKind::Stirling2(m) => write!(f, "stirling2(m={m})"),
            SeqKind::BellNumber => f.write_str("bell"),
            SeqKind::BellPoly => f.write_str("bellpoly"),
            SeqKind::FubiniNumber => f.write_str("fubini"),
            SeqKind::FubiniPoly => f.write_str("fubinipoly"),
        }
    }
}

/// A sequence value: an integer or an integer polynomial.
///
/// Serializes as a decimal string, or as an ascending array of decimal
/// strings for polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Number(BigInt),
    Poly(IntPolynomial),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Number(v) => write!(f, "{v}"),
            Term::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Term::Number(v) => serializer.serialize_str(&v.to_string()),
            Term::Poly(p) => p.serialize(serializer),
        }
    }
}

impl From<BigInt> for Term {
    fn from(v: BigInt) -> Self {
        Term::Number(v)
    }
}

impl From<IntPolynomial> for Term {
    fn from(p: IntPolynomial) -> Self {
        Term::Poly(p)
    }
}
