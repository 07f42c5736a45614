//! Euler-Seidel tables.
//!
//! Row 0 is the initial sequence and every later entry is the sum of the
//! two entries above it: `a_n^k = a_n^{k-1} + a_{n+1}^{k-1}`. The first
//! column `a_0^n` is then the binomial transform of the first row.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial_row, IntPolynomial};

/// Exact additive values that can populate a table.
pub trait Entry: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    /// `self += c * other`
    fn add_scaled(&mut self, other: &Self, c: &BigInt);
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        *self += other * c;
    }
}

impl Entry for IntPolynomial {
    fn zero() -> Self {
        IntPolynomial::zero()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        IntPolynomial::add_scaled(self, other, c);
    }
}

/// Triangular Euler-Seidel table built from a finite initial sequence of
/// length `N`; row `k` has `N - k` entries and `rows[k][n] = a_n^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EsMatrix<E> {
    rows: Vec<Vec<E>>,
}

impl<E: Entry> EsMatrix<E> {
    pub fn build(initial: Vec<E>) -> Result<Self> {
        if initial.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut rows = Vec::with_capacity(initial.len());
        rows.push(initial);
        loop {
            let prev: &Vec<E> = rows.last().expect("nonempty");
            if prev.len() == 1 {
                break;
            }
            let next = prev.windows(2).map(|w| w[0].add(&w[1])).collect();
            rows.push(next);
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    /// Number of rows, equal to the length of the initial sequence.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `a_n^k`, if stored.
    pub fn get(&self, k: usize, n: usize) -> Option<&E> {
        self.rows.get(k)?.get(n)
    }

    pub fn first_row(&self) -> &[E] {
        &self.rows[0]
    }

    /// `a_0^n` for every row `n`.
    pub fn first_column(&self) -> Vec<E> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }

    /// Position `(k, n)` of the first entry violating the defining
    /// recurrence, or `None` if every entry satisfies it.
    pub fn recurrence_violation(&self) -> Option<(usize, usize)> {
        for k in 1..self.rows.len() {
            let (above, row) = (&self.rows[k - 1], &self.rows[k]);
            if row.len() + 1 != above.len() {
                return Some((k, row.len().min(above.len())));
            }
            for (n, e) in row.iter().enumerate() {
                if *e != above[n].add(&above[n + 1]) {
                    return Some((k, n));
                }
            }
        }
        None
    }

    /// Applies `f` to every entry, keeping the shape.
    pub fn map<F: Entry>(&self, f: impl Fn(&E) -> F) -> EsMatrix<F> {
        EsMatrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }
}

/// `b_n = Σ_k C(n,k) a_k`, computed from the explicit sum.
pub fn binomial_transform<E: Entry>(a: &[E]) -> Vec<E> {
    (0..a.len())
        .map(|n| {
            let row = binomial_row(n);
            let mut acc = E::zero();
            for (c, ak) in row.iter().zip(a) {
                acc.add_scaled(ak, c);
            }
            acc
        })
        .collect()
}

/// `a_n = Σ_k C(n,k) (-1)^{n-k} b_k`, the inverse of [`binomial_transform`].
pub fn inverse_binomial_transform<E: Entry>(b: &[E]) -> Vec<E> {
    (0..b.len())
        .map(|n| {
            let row = binomial_row(n);
            let mut acc = E::zero();
            for (k, (c, bk)) in row.iter().zip(b).enumerate() {
                if (n - k) % 2 == 0 {
                    acc.add_scaled(bk, c);
                } else {
                    acc.add_scaled(bk, &-c);
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{bell_number, bell_polynomial};
    use num_traits::One;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(big).collect()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn bell_triangle() {
        let m = EsMatrix::build(bigs(&[1, 1, 2, 5, 15, 52])).unwrap();
        let expect = [
            vec![1, 1, 2, 5, 15, 52],
            vec![2, 3, 7, 20, 67],
            vec![5, 10, 27, 87],
            vec![15, 37, 114],
            vec![52, 151],
            vec![203],
        ];
        for (row, want) in m.rows().iter().zip(&expect) {
            assert_eq!(row, &bigs(want));
        }
        assert_eq!(m.first_column(), bigs(&[1, 2, 5, 15, 52, 203]));
        assert_eq!(m.recurrence_violation(), None);
    }

    #[test]
    fn zero_sequence() {
        let m = EsMatrix::build(vec![<BigInt as Zero>::zero(); 5]).unwrap();
        assert!(m.rows().iter().flatten().all(|e| e.is_zero()));
        assert_eq!(m.first_column(), vec![<BigInt as Zero>::zero(); 5]);
    }

    #[test]
    fn fubini_triangle_follows_the_recurrence() {
        let m = EsMatrix::build(bigs(&[1, 1, 3, 13, 75])).unwrap();
        assert_eq!(m.rows()[1], bigs(&[2, 4, 16, 88]));
        assert_eq!(m.rows()[2], bigs(&[6, 20, 104]));
        assert_eq!(m.rows()[3], bigs(&[26, 124]));
        assert_eq!(m.rows()[4], bigs(&[150]));
        assert_eq!(m.first_column(), bigs(&[1, 2, 6, 26, 150]));
    }

    #[test]
    fn bell_polynomial_triangle() {
        let m = EsMatrix::build((0..4).map(bell_polynomial).collect()).unwrap();
        assert_eq!(
            m.first_column(),
            vec![p(&[1]), p(&[1, 1]), p(&[1, 3, 1]), p(&[1, 7, 6, 1])]
        );
        assert_eq!(
            m.rows()[1],
            vec![p(&[1, 1]), p(&[0, 2, 1]), p(&[0, 2, 4, 1])]
        );
        assert_eq!(m.rows()[2], vec![p(&[1, 3, 1]), p(&[0, 4, 5, 1])]);
    }

    #[test]
    fn empty_sequence_is_rejected() {
        assert_eq!(
            EsMatrix::<BigInt>::build(vec![]).unwrap_err(),
            Error::EmptySequence
        );
        let single = EsMatrix::build(bigs(&[7])).unwrap();
        assert_eq!(single.size(), 1);
        assert_eq!(single.first_column(), bigs(&[7]));
    }

    #[test]
    fn recurrence_violation_is_located() {
        let mut m = EsMatrix::build(bigs(&[1, 1, 3, 13, 75])).unwrap();
        m.rows[2][1] += 1;
        assert_eq!(m.recurrence_violation(), Some((2, 1)));
    }

    #[test]
    fn transforms_on_tables() {
        assert_eq!(
            binomial_transform(&bigs(&[1, 1, 2, 5, 15])),
            bigs(&[1, 2, 5, 15, 52])
        );
        assert_eq!(
            binomial_transform(&bigs(&[1, 1, 3, 13, 75])),
            bigs(&[1, 2, 6, 26, 150])
        );
        assert_eq!(
            inverse_binomial_transform(&bigs(&[1, 2, 5, 15, 52])),
            bigs(&[1, 1, 2, 5, 15])
        );
        assert_eq!(
            inverse_binomial_transform(&bigs(&[1, 2, 6, 26, 150])),
            bigs(&[1, 1, 3, 13, 75])
        );

        let c = big(-7);
        let out = binomial_transform(&vec![c.clone(); 10]);
        for (n, v) in out.iter().enumerate() {
            assert_eq!(v, &(&c << n));
        }
        assert!(binomial_transform::<BigInt>(&[]).is_empty());
    }

    #[test]
    fn evaluation_commutes_with_the_table() {
        let one = BigInt::one();
        let poly = EsMatrix::build((0..12).map(bell_polynomial).collect()).unwrap();
        let num = EsMatrix::build((0..12).map(bell_number).collect()).unwrap();
        assert_eq!(poly.map(|e| e.eval(&one)), num);
    }

    fn big_list() -> impl Strategy<Value = Vec<BigInt>> {
        prop::collection::vec(any::<i64>().prop_map(BigInt::from), 1..=64)
    }

    proptest! {
        #[test]
        fn first_column_is_binomial_transform(a in big_list()) {
            let m = EsMatrix::build(a.clone()).unwrap();
            prop_assert_eq!(m.recurrence_violation(), None);
            prop_assert_eq!(m.first_column(), binomial_transform(&a));
        }

        #[test]
        fn transforms_are_inverse(a in big_list()) {
            prop_assert_eq!(inverse_binomial_transform(&binomial_transform(&a)), a.clone());
            prop_assert_eq!(binomial_transform(&inverse_binomial_transform(&a)), a);
        }
    }
}
