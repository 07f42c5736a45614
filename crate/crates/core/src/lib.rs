//! Exact Euler-Seidel matrices and the special numbers they expose.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`] holds the arithmetic substrate: binomial coefficients, dense
//!   integer polynomials and truncated power series over the rationals.
//! * [`sequences`] generates Stirling numbers of the second kind together
//!   with the exponential (Bell) and geometric (Fubini) numbers and
//!   polynomials.
//! * [`euler_seidel`] builds the triangular table `a_n^k = a_n^{k-1} +
//!   a_{n+1}^{k-1}` and the binomial transform pair linking its first row
//!   and first column.
//! * [`series`] checks the ordinary and exponential generating function
//!   dualities of the table on truncated series.
//! * [`identities`] is a registry of exact finite-range identity checks.
//!
//! All arithmetic is exact; there is no floating-point path.

pub mod error;
pub mod euler_seidel;
pub mod exact;
pub mod identities;
pub mod sequences;
pub mod series;
pub mod status;

pub use error::{Error, Result};
pub use euler_seidel::{binomial_transform, inverse_binomial_transform, Entry, EsMatrix};
pub use exact::{binomial, binomial_row, factorial, IntPolynomial, PolySeries, PowerSeries};
pub use identities::{
    check, check_all, check_all_with, check_with, Counterexample, Fixtures, IdentityCheck,
};
pub use sequences::{
    bell_number, bell_polynomial, fubini_number, fubini_polynomial, gamma_transform, stirling2,
    SeqKind, Term,
};
pub use series::{egf_dual, egf_dual_poly, ogf_dual, run_series_checks, SeriesCheckResult};
pub use status::Status;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
