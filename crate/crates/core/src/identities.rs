//! Exact finite-range checks of the binomial-sum identities satisfied by
//! Stirling numbers, Bell numbers and polynomials, and Fubini numbers and
//! polynomials.
//!
//! Each check evaluates both sides for every `n` up to `max_n` (and every
//! Stirling column `m <= 8` where applicable) and reports the first
//! disagreement. Identities with a division by `x` or `1 + x` are checked
//! after multiplying through, so everything stays in `Z[x]`.
//!
//! Checks read their inputs from a [`Fixtures`] table rather than calling
//! the generators directly, so a corrupted table can be fed in to confirm
//! that the suite notices.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler_seidel::EsMatrix;
use crate::exact::{binomial_row, IntPolynomial};
use crate::sequences::{
    bell_number, bell_polynomial, fubini_number, fubini_polynomial, stirling_row, Term,
};
use crate::status::Status;

/// Largest Stirling column `m` exercised by the Stirling checks.
pub const MAX_STIRLING_COLUMN: usize = 8;

/// Sequence values consumed by the checks, indexed `0..=max_n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixtures {
    max_n: usize,
    /// Stirling rows `S(n, 0..=n)`.
    pub stirling: Vec<Vec<BigInt>>,
    pub bell: Vec<BigInt>,
    pub bell_poly: Vec<IntPolynomial>,
    pub fubini: Vec<BigInt>,
    pub fubini_poly: Vec<IntPolynomial>,
}

impl Fixtures {
    /// Tables large enough for any check with range bound `max_n`.
    pub fn new(max_n: usize) -> Self {
        let len = max_n + 2;
        Self {
            max_n,
            stirling: (0..len).map(stirling_row).collect(),
            bell: (0..len).map(bell_number).collect(),
            bell_poly: (0..len).map(bell_polynomial).collect(),
            fubini: (0..len).map(fubini_number).collect(),
            fubini_poly: (0..len).map(fubini_polynomial).collect(),
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn s(&self, n: usize, k: usize) -> BigInt {
        self.stirling[n].get(k).cloned().unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    /// Stirling column, for the Stirling family only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    #[serde(rename = "eq")]
    pub eq_label: &'static str,
    pub max_n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

type Check = fn(&Fixtures, usize) -> Option<Counterexample>;

struct Identity {
    name: &'static str,
    eq_label: &'static str,
    run: Check,
}

const REGISTRY: &[Identity] = &[
    Identity {
        name: "stirling_shift",
        eq_label: "19",
        run: stirling_shift,
    },
    Identity {
        name: "stirling_inverse",
        eq_label: "20",
        run: stirling_inverse,
    },
    Identity {
        name: "bell_shift",
        eq_label: "21",
        run: bell_shift,
    },
    Identity {
        name: "bell_inverse",
        eq_label: "22",
        run: bell_inverse,
    },
    Identity {
        name: "bellpoly_shift",
        eq_label: "23'",
        run: bellpoly_shift,
    },
    Identity {
        name: "bellpoly_inverse",
        eq_label: "24",
        run: bellpoly_inverse,
    },
    Identity {
        name: "bellpoly_derivative",
        eq_label: "25'",
        run: bellpoly_derivative,
    },
    Identity {
        name: "bellpoly_symmetric",
        eq_label: "26",
        run: bellpoly_symmetric,
    },
    Identity {
        name: "fubini_double",
        eq_label: "27",
        run: fubini_double,
    },
    Identity {
        name: "fubini_inverse",
        eq_label: "28",
        run: fubini_inverse,
    },
    Identity {
        name: "fubinipoly_column",
        eq_label: "29",
        run: fubinipoly_column,
    },
    Identity {
        name: "fubinipoly_recurrence",
        eq_label: "30",
        run: fubinipoly_recurrence,
    },
    Identity {
        name: "fubinipoly_sum",
        eq_label: "31",
        run: fubinipoly_sum,
    },
    Identity {
        name: "fubinipoly_derivative_rec",
        eq_label: "32",
        run: fubinipoly_derivative_rec,
    },
    Identity {
        name: "fubinipoly_symmetric",
        eq_label: "33",
        run: fubinipoly_symmetric,
    },
];

/// Registered identity names, in reporting order.
pub fn names() -> Vec<&'static str> {
    REGISTRY.iter().map(|i| i.name).collect()
}

/// Runs one named check for `n <= max_n` on freshly generated fixtures.
pub fn check(name: &str, max_n: usize) -> Result<IdentityCheck> {
    let identity = lookup(name)?;
    validate_max_n(max_n)?;
    Ok(evaluate(identity, &Fixtures::new(max_n), max_n))
}

/// Runs one named check against caller-supplied fixtures.
pub fn check_with(fixtures: &Fixtures, name: &str, max_n: usize) -> Result<IdentityCheck> {
    let identity = lookup(name)?;
    validate_max_n(max_n)?;
    validate_fixtures(fixtures, max_n)?;
    Ok(evaluate(identity, fixtures, max_n))
}

/// Runs every registered check, in registry order.
pub fn check_all(max_n: usize) -> Result<Vec<IdentityCheck>> {
    validate_max_n(max_n)?;
    check_all_with(&Fixtures::new(max_n), max_n)
}

/// Runs every registered check against caller-supplied fixtures. The checks
/// are independent and run on scoped threads; output order is the registry
/// order.
pub fn check_all_with(fixtures: &Fixtures, max_n: usize) -> Result<Vec<IdentityCheck>> {
    validate_max_n(max_n)?;
    validate_fixtures(fixtures, max_n)?;
    Ok(std::thread::scope(|scope| {
        let handles: Vec<_> = REGISTRY
            .iter()
            .map(|identity| scope.spawn(move || evaluate(identity, fixtures, max_n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("identity check panicked"))
            .collect()
    }))
}

fn lookup(name: &str) -> Result<&'static Identity> {
    REGISTRY
        .iter()
        .find(|i| i.name == name)
        .ok_or_else(|| Error::UnknownIdentity {
            name: name.to_owned(),
            registered: names(),
        })
}

fn validate_max_n(max_n: usize) -> Result<()> {
    if max_n < 1 {
        return Err(Error::MaxNTooSmall(max_n));
    }
    Ok(())
}

fn validate_fixtures(fixtures: &Fixtures, max_n: usize) -> Result<()> {
    let needed = max_n + 2;
    let have = [
        fixtures.stirling.len(),
        fixtures.bell.len(),
        fixtures.bell_poly.len(),
        fixtures.fubini.len(),
        fixtures.fubini_poly.len(),
    ]
    .into_iter()
    .min()
    .unwrap_or(0);
    if have < needed {
        return Err(Error::FixturesTooShort { needed, have });
    }
    Ok(())
}

fn evaluate(identity: &Identity, fixtures: &Fixtures, max_n: usize) -> IdentityCheck {
    let counterexample = (identity.run)(fixtures, max_n);
    IdentityCheck {
        name: identity.name,
        eq_label: identity.eq_label,
        max_n,
        status: if counterexample.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        counterexample,
    }
}

fn compare<T: Into<Term> + PartialEq>(
    n: usize,
    m: Option<usize>,
    lhs: T,
    rhs: T,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample {
        n,
        m,
        lhs: lhs.into(),
        rhs: rhs.into(),
    })
}

fn signed(c: &BigInt, negative: bool) -> BigInt {
    if negative {
        -c
    } else {
        c.clone()
    }
}

/// `Σ_k C(n,k) (-1)^{n-k} f(k)` over integers.
fn alternating_sum(n: usize, f: impl Fn(usize) -> BigInt) -> BigInt {
    binomial_row(n)
        .iter()
        .enumerate()
        .map(|(k, c)| signed(c, (n - k) % 2 == 1) * f(k))
        .sum()
}

/// `Σ_k C(n,k) f(k)` over integers.
fn binomial_sum(n: usize, f: impl Fn(usize) -> BigInt) -> BigInt {
    binomial_row(n)
        .iter()
        .enumerate()
        .map(|(k, c)| c * f(k))
        .sum()
}

/// `Σ_{k in range} weight(k) p_k`
fn poly_sum<'a>(terms: impl IntoIterator<Item = (BigInt, &'a IntPolynomial)>) -> IntPolynomial {
    let mut acc = IntPolynomial::zero();
    for (c, p) in terms {
        acc.add_scaled(p, &c);
    }
    acc
}

// Σ_k C(n,k) S(k,m) = S(n+1, m+1)
fn stirling_shift(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (0..=max_n).find_map(|n| {
        (0..=MAX_STIRLING_COLUMN).find_map(|m| {
            let lhs = binomial_sum(n, |k| fx.s(k, m));
            compare(n, Some(m), lhs, fx.s(n + 1, m + 1))
        })
    })
}

// Σ_k C(n,k) (-1)^{n-k} S(k+1, m+1) = S(n, m)
fn stirling_inverse(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (0..=max_n).find_map(|n| {
        (0..=MAX_STIRLING_COLUMN).find_map(|m| {
            let lhs = alternating_sum(n, |k| fx.s(k + 1, m + 1));
            compare(n, Some(m), lhs, fx.s(n, m))
        })
    })
}

// φ_{n+1} = Σ_k C(n,k) φ_k
fn bell_shift(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (0..=max_n).find_map(|n| {
        let rhs = binomial_sum(n, |k| fx.bell[k].clone());
        compare(n, None, fx.bell[n + 1].clone(), rhs)
    })
}

// φ_n = Σ_k C(n,k) (-1)^{n-k} φ_{k+1}
fn bell_inverse(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (0..=max_n).find_map(|n| {
        let rhs = alternating_sum(n, |k| fx.bell[k + 1].clone());
        compare(n, None, fx.bell[n].clone(), rhs)
    })
}

// φ_{n+1}(x) = x Σ_k C(n,k) φ_k(x)
fn bellpoly_shift(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (0..=max_n).find_map(|n| {
        let sum = poly_sum(binomial_row(n).into_iter().zip(&fx.bell_poly));
        compare(n, None, fx.bell_poly[n + 1].clone(), sum.shift(1))
    })
}

// x φ_n(x) = Σ_k C(n,k) (-1)^{n-k} φ_{k+1}(x)
fn bellpoly_inverse(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (0..=max_n).find_map(|n| {
        let rhs = poly_sum(
            binomial_row(n)
                .iter()
                .enumerate()
                .map(|(k, c)| (signed(c, (n - k) % 2 == 1), &fx.bell_poly[k + 1])),
        );
        compare(n, None, fx.bell_poly[n].shift(1), rhs)
    })
}

// φ_{n+1}(x) = x (φ_n(x) + φ_n'(x))
fn bellpoly_derivative(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (0..=max_n).find_map(|n| {
        let phi = &fx.bell_poly[n];
        let rhs = (phi + &phi.derivative()).shift(1);
        compare(n, None, fx.bell_poly[n + 1].clone(), rhs)
    })
}

// Σ_{k<n} C(n,k) (-1)^k φ_k(x) = Σ_{k=1..n} C(n,k) (-1)^{k-1} φ_k'(x)
fn bellpoly_symmetric(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    let derivs: Vec<IntPolynomial> = fx.bell_poly.iter().map(IntPolynomial::derivative).collect();
    (0..=max_n).find_map(|n| {
        let row = binomial_row(n);
        let lhs = poly_sum((0..n).map(|k| (signed(&row[k], k % 2 == 1), &fx.bell_poly[k])));
        let rhs = poly_sum((1..=n).map(|k| (signed(&row[k], k % 2 == 0), &derivs[k])));
        compare(n, None, lhs, rhs)
    })
}

// 2 F_n = Σ_k C(n,k) F_k, n >= 1
fn fubini_double(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (1..=max_n).find_map(|n| {
        let rhs = binomial_sum(n, |k| fx.fubini[k].clone());
        compare(n, None, &fx.fubini[n] * 2, rhs)
    })
}

// Inverse partner of fubini_double. The first column of the Fubini table is
// (1, 2F_1, 2F_2, ...): its n = 0 entry is 1 rather than 2F_0, so inverting
// gives F_n = 2 Σ_k C(n,k) (-1)^{n-k} F_k - (-1)^n.
fn fubini_inverse(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (1..=max_n).find_map(|n| {
        let sum = alternating_sum(n, |k| fx.fubini[k].clone());
        let rhs = sum * 2 - signed(&BigInt::one(), n % 2 == 1);
        compare(n, None, fx.fubini[n].clone(), rhs)
    })
}

// x a_0^n = F_{n+1}(x) - x Σ_{k=1..n} C(n,k-1) F_k(x), with a_0^n read off
// the Euler-Seidel table of F_0(x), ..., F_max_n(x)
fn fubinipoly_column(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    let table = EsMatrix::build(fx.fubini_poly[..=max_n].to_vec()).expect("nonempty");
    let column = table.first_column();
    (0..=max_n).find_map(|n| {
        let row = binomial_row(n);
        let sum = poly_sum((1..=n).map(|k| (row[k - 1].clone(), &fx.fubini_poly[k])));
        let rhs = &fx.fubini_poly[n + 1] - &sum.shift(1);
        compare(n, None, column[n].shift(1), rhs)
    })
}

// F_n(x) = x Σ_{k<n} C(n,k) F_k(x), n >= 1 (n = 0 reads 1 = 0)
fn fubinipoly_recurrence(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    (1..=max_n).find_map(|n| {
        let sum = poly_sum(binomial_row(n).into_iter().zip(&fx.fubini_poly[..n]));
        compare(n, None, fx.fubini_poly[n].clone(), sum.shift(1))
    })
}

// (1 + x) F_{n+1}(x) = x Σ_k C(n,k) [F_k(x) + F_{k+1}(x)]
fn fubinipoly_sum(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    let one_plus_x = IntPolynomial::from_i64s(&[1, 1]);
    (0..=max_n).find_map(|n| {
        let pairs: Vec<IntPolynomial> = (0..=n)
            .map(|k| &fx.fubini_poly[k] + &fx.fubini_poly[k + 1])
            .collect();
        let sum = poly_sum(binomial_row(n).into_iter().zip(&pairs));
        compare(n, None, &one_plus_x * &fx.fubini_poly[n + 1], sum.shift(1))
    })
}

// F_{n+1}(x) = x Σ_k C(n,k) [F_k(x) + x F_k'(x)]
fn fubinipoly_derivative_rec(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    let terms: Vec<IntPolynomial> = fx
        .fubini_poly
        .iter()
        .map(|f| f + &f.derivative().shift(1))
        .collect();
    (0..=max_n).find_map(|n| {
        let sum = poly_sum(binomial_row(n).into_iter().zip(&terms));
        compare(n, None, fx.fubini_poly[n + 1].clone(), sum.shift(1))
    })
}

// Σ_k C(n,k) x F_k'(x) = Σ_{k=1..n} C(n,k-1) F_k(x)
fn fubinipoly_symmetric(fx: &Fixtures, max_n: usize) -> Option<Counterexample> {
    let x_derivs: Vec<IntPolynomial> = fx
        .fubini_poly
        .iter()
        .map(|f| f.derivative().shift(1))
        .collect();
    (0..=max_n).find_map(|n| {
        let row = binomial_row(n);
        let lhs = poly_sum(row.iter().cloned().zip(&x_derivs));
        let rhs = poly_sum((1..=n).map(|k| (row[k - 1].clone(), &fx.fubini_poly[k])));
        compare(n, None, lhs, rhs)
    })
}
