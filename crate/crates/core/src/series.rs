//! Generating-function dualities of the Euler-Seidel table on truncated
//! series.
//!
//! If `a(t)` is the ordinary generating function of the first row, the
//! first column has OGF `1/(1-t) · a(t/(1-t))`; if `A(t)` is the exponential
//! generating function of the first row, the first column has EGF
//! `e^t A(t)`. Both are checked here coefficient by coefficient against the
//! explicit binomial transform and against the closed forms of the Stirling,
//! Bell and Fubini generating functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler_seidel::binomial_transform;
use crate::exact::{binomial_row, factorial, IntPolynomial, PolySeries, PowerSeries};
use crate::sequences::{bell_number, bell_polynomial, fubini_number, fubini_polynomial, stirling2};
use crate::status::Status;

/// Orders below this make several checks vacuous.
pub const MIN_ORDER: usize = 4;
pub const DEFAULT_ORDER: usize = 32;
/// Largest Stirling column used by the `S5` and `S17pp` checks.
pub const MAX_STIRLING_COLUMN: usize = 6;

/// `1/(1-t) · a(t/(1-t))`, the OGF of the first column.
pub fn ogf_dual(a: &PowerSeries) -> PowerSeries {
    let order = a.order();
    let geometric = PowerSeries::geometric(order);
    let inner = PowerSeries::t(order).mul(&geometric).expect("equal orders");
    a.compose(&inner)
        .and_then(|c| c.mul(&geometric))
        .expect("inner series has zero constant term")
}

/// `e^t · A(t)`, the EGF of the first column.
pub fn egf_dual(a: &PowerSeries) -> PowerSeries {
    PowerSeries::exp_linear(1, a.order())
        .mul(a)
        .expect("equal orders")
}

/// `e^t · A(t, x)` on a polynomial-valued EGF.
pub fn egf_dual_poly(a: &PolySeries) -> PolySeries {
    PolySeries::exp_t(a.order()).mul(a).expect("equal orders")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesCheckResult {
    pub name: &'static str,
    pub order: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<usize>,
}

impl SeriesCheckResult {
    fn new(name: &'static str, order: usize, first_mismatch: Option<usize>) -> Self {
        let status = if first_mismatch.is_none() {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            name,
            order,
            status,
            first_mismatch,
        }
    }
}

type SeriesCheck = fn(usize) -> Result<Option<usize>>;

/// Registry of series checks, in reporting order.
pub const SERIES_CHECKS: &[(&str, SeriesCheck)] = &[
    ("S5", check_stirling_egf),
    ("S7", check_bell_poly_egf),
    ("S15", check_fubini_poly_egf),
    ("S17pp", check_stirling_dual),
    ("S20p", check_bell_dual),
    ("S22p", check_bell_poly_dual),
    ("S28p", check_fubini_poly_dual),
    ("SEuler", check_euler),
    ("SSeidel", check_seidel),
];

/// Runs every registered series check at truncation order `order`.
pub fn run_series_checks(order: usize) -> Result<Vec<SeriesCheckResult>> {
    if order < MIN_ORDER {
        return Err(Error::OrderTooSmall {
            order,
            min: MIN_ORDER,
        });
    }
    SERIES_CHECKS
        .iter()
        .map(|(name, run)| Ok(SeriesCheckResult::new(name, order, run(order)?)))
        .collect()
}

fn earliest(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

fn rationals(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

fn first_diff<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    a.iter()
        .zip(b)
        .position(|(x, y)| x != y)
        .or_else(|| (a.len() != b.len()).then_some(a.len().min(b.len())))
}

fn exp_minus_one(order: usize) -> PowerSeries {
    PowerSeries::exp_linear(1, order)
        .sub(&PowerSeries::one(order))
        .expect("equal orders")
}

/// `(e^t - 1)^m / m!`
fn stirling_column_egf(m: usize, order: usize) -> Result<PowerSeries> {
    let inv = BigRational::new(BigInt::from(1), factorial(m));
    Ok(exp_minus_one(order).pow(m)?.scale(&inv))
}

/// `x (e^t - 1)` as a polynomial-valued EGF.
fn x_exp_minus_one(order: usize) -> PolySeries {
    let mut slots = vec![IntPolynomial::x(); order + 1];
    slots[0] = IntPolynomial::zero();
    PolySeries::from_slots(slots, order)
}

/// `1 - x (e^t - 1)`
fn fubini_denominator(order: usize) -> Result<PolySeries> {
    PolySeries::from_slots(vec![IntPolynomial::one()], order).sub(&x_exp_minus_one(order))
}

fn check_stirling_egf(order: usize) -> Result<Option<usize>> {
    let mut worst = None;
    for m in 0..=MAX_STIRLING_COLUMN {
        let lhs = stirling_column_egf(m, order)?;
        let column: Vec<BigInt> = (0..=order).map(|n| stirling2(n, m)).collect();
        let rhs = PowerSeries::from_egf(&column, order);
        worst = earliest(worst, lhs.first_mismatch(&rhs)?);
    }
    Ok(worst)
}

fn check_bell_poly_egf(order: usize) -> Result<Option<usize>> {
    let lhs = x_exp_minus_one(order).exp()?;
    let rhs = PolySeries::from_slots((0..=order).map(bell_polynomial).collect(), order);
    lhs.first_mismatch(&rhs)
}

fn check_fubini_poly_egf(order: usize) -> Result<Option<usize>> {
    let lhs = fubini_denominator(order)?.recip()?;
    let rhs = PolySeries::from_slots((0..=order).map(fubini_polynomial).collect(), order);
    lhs.first_mismatch(&rhs)
}

/// `e^t (e^t-1)^m/m! = d/dt (e^t-1)^{m+1}/(m+1)!`, whose coefficients are
/// `S(n+1, m+1)`.
fn check_stirling_dual(order: usize) -> Result<Option<usize>> {
    let mut worst = None;
    for m in 0..=MAX_STIRLING_COLUMN {
        let dual = egf_dual(&stirling_column_egf(m, order)?).truncate(order - 1);
        let derived = stirling_column_egf(m + 1, order)?.derivative();
        let shifted: Vec<BigInt> = (0..order).map(|n| stirling2(n + 1, m + 1)).collect();
        let table = PowerSeries::from_egf(&shifted, order - 1);
        worst = earliest(worst, dual.first_mismatch(&derived)?);
        worst = earliest(worst, dual.first_mismatch(&table)?);
    }
    Ok(worst)
}

/// `e^t e^{e^t-1} = d/dt e^{e^t-1}`, coefficients `φ_{n+1}`.
fn check_bell_dual(order: usize) -> Result<Option<usize>> {
    let bell_egf = exp_minus_one(order).exp()?;
    let dual = egf_dual(&bell_egf).truncate(order - 1);
    let derived = bell_egf.derivative();
    let shifted: Vec<BigInt> = (1..=order).map(bell_number).collect();
    let table = PowerSeries::from_egf(&shifted, order - 1);
    Ok(earliest(
        dual.first_mismatch(&derived)?,
        dual.first_mismatch(&table)?,
    ))
}

/// `e^t e^{x(e^t-1)} = (1/x) d/dt e^{x(e^t-1)}`, checked as
/// `x · slot_n = φ_{n+1}(x)`.
fn check_bell_poly_dual(order: usize) -> Result<Option<usize>> {
    let a = x_exp_minus_one(order).exp()?;
    let x_dual = egf_dual_poly(&a)
        .scale(&IntPolynomial::x())
        .truncate(order - 1);
    let derived = a.derivative();
    let table = PolySeries::from_slots((1..=order).map(bell_polynomial).collect(), order - 1);
    Ok(earliest(
        x_dual.first_mismatch(&derived)?,
        x_dual.first_mismatch(&table)?,
    ))
}

/// `e^t / (1 - x(e^t-1))`. With `A = 1/(1 - x(e^t-1))` the dual satisfies
/// `x Ā = (1 - x(e^t-1)) dA/dt`, and its slots obey
/// `x a_0^n = F_{n+1}(x) - x Σ_{k=1..n} C(n,k-1) F_k(x)`.
fn check_fubini_poly_dual(order: usize) -> Result<Option<usize>> {
    let denom = fubini_denominator(order)?;
    let a = denom.recip()?;
    let x = IntPolynomial::x();
    let x_dual = egf_dual_poly(&a).scale(&x).truncate(order - 1);

    let via_derivative = denom.truncate(order - 1).mul(&a.derivative())?;

    let fub: Vec<IntPolynomial> = (0..=order).map(fubini_polynomial).collect();
    let column = (0..order)
        .map(|n| {
            let row = binomial_row(n);
            let mut sum = IntPolynomial::zero();
            for k in 1..=n {
                sum.add_scaled(&fub[k], &row[k - 1]);
            }
            &fub[n + 1] - &sum.shift(1)
        })
        .collect();
    let table = PolySeries::from_slots(column, order - 1);

    Ok(earliest(
        x_dual.first_mismatch(&via_derivative)?,
        x_dual.first_mismatch(&table)?,
    ))
}

fn dual_sequences(order: usize) -> [Vec<BigInt>; 3] {
    [
        vec![BigInt::from(1); order + 1],
        (0..=order).map(bell_number).collect(),
        (0..=order).map(fubini_number).collect(),
    ]
}

/// `[t^n] ā = Σ_k C(n,k) [t^k] a` on all-ones, Bell and Fubini.
fn check_euler(order: usize) -> Result<Option<usize>> {
    let mut worst = None;
    for seq in dual_sequences(order) {
        let dual = ogf_dual(&PowerSeries::from_integers(&seq, order));
        let expect = rationals(&binomial_transform(&seq));
        worst = earliest(worst, first_diff(dual.coeffs(), &expect));
    }
    Ok(worst)
}

/// `n! [t^n] Ā = Σ_k C(n,k) a_k` on all-ones, Bell and Fubini.
fn check_seidel(order: usize) -> Result<Option<usize>> {
    let mut worst = None;
    for seq in dual_sequences(order) {
        let dual = egf_dual(&PowerSeries::from_egf(&seq, order));
        let expect = rationals(&binomial_transform(&seq));
        worst = earliest(worst, first_diff(&dual.egf_coeffs(), &expect));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler_seidel::EsMatrix;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn ogf_dual_examples() {
        let d = ogf_dual(&PowerSeries::one(7));
        assert!(d.try_eq(&PowerSeries::geometric(7)).unwrap());

        let d = ogf_dual(&PowerSeries::geometric(7));
        for n in 0..=7 {
            assert_eq!(d.coeff(n), &r(1 << n, 1));
        }

        let bell: Vec<BigInt> = (0..=16).map(bell_number).collect();
        let d = ogf_dual(&PowerSeries::from_integers(&bell, 16));
        assert_eq!(d.coeffs(), &rationals(&binomial_transform(&bell))[..]);
    }

    #[test]
    fn egf_dual_examples() {
        let d = egf_dual(&PowerSeries::one(6));
        assert!(d.try_eq(&PowerSeries::exp_linear(1, 6)).unwrap());

        let bell_egf = exp_minus_one(10).exp().unwrap();
        let scaled = egf_dual(&bell_egf).egf_coeffs();
        for (n, c) in scaled.iter().enumerate() {
            assert_eq!(c, &BigRational::from_integer(bell_number(n + 1)));
        }
    }

    #[test]
    fn egf_dual_poly_examples() {
        let order = 8;
        let a = PolySeries::from_slots((0..=order).map(bell_polynomial).collect(), order);
        let d = egf_dual_poly(&a);
        for n in 0..=order {
            assert_eq!(d.slot(n).shift(1), bell_polynomial(n + 1));
        }
        assert_eq!(egf_dual_poly(&PolySeries::zero(5)), PolySeries::zero(5));

        // slots agree with the first column of the Fubini-polynomial table
        let fub: Vec<IntPolynomial> = (0..=order).map(fubini_polynomial).collect();
        let d = egf_dual_poly(&PolySeries::from_slots(fub.clone(), order));
        let column = EsMatrix::build(fub).unwrap().first_column();
        assert_eq!(d.slots(), &column[..]);
        assert_eq!(d.slot(1), &p(&[1, 1]));
    }

    #[test]
    fn order_below_minimum_is_rejected() {
        assert_eq!(
            run_series_checks(3).unwrap_err(),
            Error::OrderTooSmall { order: 3, min: 4 }
        );
    }

    #[test]
    fn all_checks_pass_at_small_orders() {
        for order in [4, 5, 8, 13] {
            let results = run_series_checks(order).unwrap();
            assert_eq!(results.len(), SERIES_CHECKS.len());
            for res in results {
                assert_eq!(res.status, Status::Pass, "{} at order {order}", res.name);
                assert_eq!(res.order, order);
            }
        }
    }

    #[test]
    fn stirling_column_zero_is_one() {
        let s = stirling_column_egf(0, 4).unwrap();
        assert!(s.try_eq(&PowerSeries::one(4)).unwrap());
    }

    #[test]
    fn fubini_egf_slot_four() {
        let f = fubini_denominator(8).unwrap().recip().unwrap();
        assert_eq!(f.slot(4), &p(&[0, 1, 14, 36, 24]));
    }

    #[test]
    fn results_are_in_registry_order() {
        let names: Vec<&str> = run_series_checks(4)
            .unwrap()
            .iter()
            .map(|r| r.name)
            .collect();
        assert_eq!(
            names,
            ["S5", "S7", "S15", "S17pp", "S20p", "S22p", "S28p", "SEuler", "SSeidel"]
        );
    }

    #[test]
    fn mismatch_reporting() {
        assert_eq!(earliest(Some(3), Some(1)), Some(1));
        assert_eq!(earliest(None, Some(4)), Some(4));
        assert_eq!(earliest(None, None), None);
        assert_eq!(first_diff(&[1, 2, 3], &[1, 2, 4]), Some(2));
        assert_eq!(first_diff(&[1, 2], &[1, 2, 4]), Some(2));
        let res = SeriesCheckResult::new("S5", 8, Some(2));
        assert_eq!(res.status, Status::Fail);
        let json = serde_json::to_string(&SeriesCheckResult::new("S7", 8, None)).unwrap();
        assert_eq!(json, r#"{"name":"S7","order":8,"status":"pass"}"#);
    }

    fn rational() -> impl Strategy<Value = BigRational> {
        (-30i64..30, 1i64..10).prop_map(|(n, d)| r(n, d))
    }

    fn rational_series() -> impl Strategy<Value = PowerSeries> {
        (0usize..=16).prop_flat_map(|order| {
            prop::collection::vec(rational(), order + 1)
                .prop_map(move |c| PowerSeries::from_coeffs(c, order))
        })
    }

    /// `Σ_k C(n,k) a_k` on rationals, without going through `Entry`.
    fn rational_binomial_transform(a: &[BigRational]) -> Vec<BigRational> {
        (0..a.len())
            .map(|n| {
                binomial_row(n)
                    .into_iter()
                    .zip(a)
                    .fold(BigRational::zero(), |acc, (c, x)| {
                        acc + BigRational::from_integer(c) * x
                    })
            })
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn seidel_coefficient_contract(a in rational_series()) {
            let lhs = egf_dual(&a).egf_coeffs();
            prop_assert_eq!(lhs, rational_binomial_transform(&a.egf_coeffs()));
        }

        #[test]
        fn euler_coefficient_contract(a in rational_series()) {
            let lhs = ogf_dual(&a);
            prop_assert_eq!(lhs.coeffs(), &rational_binomial_transform(a.coeffs())[..]);
        }

        /// The OGF and EGF duals describe the same first column.
        #[test]
        fn ogf_and_egf_duals_agree(seq in prop::collection::vec(-1000i64..1000, 1..=17)) {
            let order = seq.len() - 1;
            let seq: Vec<BigInt> = seq.into_iter().map(BigInt::from).collect();
            let ogf = ogf_dual(&PowerSeries::from_integers(&seq, order));
            let egf = egf_dual(&PowerSeries::from_egf(&seq, order));
            prop_assert_eq!(ogf.coeffs(), &egf.egf_coeffs()[..]);
            prop_assert!(ogf.coeffs().iter().all(|c| c.is_integer()));
        }
    }
}
