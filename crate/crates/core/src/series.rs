//! Truncated power series over exact rationals.
//!
//! A [`TruncatedSeries`] holds coefficients `c_0..c_N` of a formal series
//! modulo `z^(N+1)`. All arithmetic is exact; there is no floating point
//! anywhere in this module. The two star-shaped constructions are
//! [`TruncatedSeries::seq`] (`1/(1-A)`, counting sequences of `A`-objects)
//! and [`TruncatedSeries::power`] (`A^k`, counting `k`-tuples).

use std::fmt;

use num::{BigRational, One, Zero};

use crate::rational::{parse_rat, rat_str};

/// Errors from series constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// `seq` needs `A(0) = 0`; otherwise arbitrarily many empty objects fit
    /// in a sequence and the coefficients diverge.
    NonzeroConstantTerm,
    /// Operands are truncated at different orders.
    OrderMismatch { left: usize, right: usize },
    /// A coefficient string failed to parse as `p/q`.
    BadCoefficient(String),
    /// A series needs at least the constant coefficient.
    EmptyCoefficients,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonzeroConstantTerm => {
                write!(f, "seq requires a series with zero constant term")
            }
            SeriesError::OrderMismatch { left, right } => {
                write!(f, "series orders differ: {left} vs {right}")
            }
            SeriesError::BadCoefficient(s) => write!(f, "cannot parse coefficient '{s}'"),
            SeriesError::EmptyCoefficients => write!(f, "series needs at least one coefficient"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Coefficients `c_0..c_N` of a formal power series modulo `z^(N+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Result<TruncatedSeries, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyCoefficients);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Series with the given integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> TruncatedSeries {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        TruncatedSeries {
            coeffs: coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        }
    }

    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The monomial `z^k` truncated at `order`. Panics if `k > order`.
    pub fn monomial(k: usize, order: usize) -> TruncatedSeries {
        assert!(k <= order, "monomial degree {k} exceeds order {order}");
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[k] = BigRational::one();
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Product modulo `z^(N+1)`.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// `A^k` modulo `z^(N+1)`; `k = 0` gives the constant series 1.
    pub fn power(&self, k: usize) -> TruncatedSeries {
        let mut out = TruncatedSeries::one(self.order());
        for _ in 0..k {
            out = out.mul(self).expect("orders match by construction");
        }
        out
    }

    /// Sequence construction `1/(1 - A)`: coefficient `n` counts ordered
    /// sequences of `A`-objects with total size `n`. Requires `A(0) = 0`.
    pub fn seq(&self) -> Result<TruncatedSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs[0] = BigRational::one();
        for i in 1..n {
            let mut c = BigRational::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    c += &self.coeffs[j] * &coeffs[i - j];
                }
            }
            coeffs[i] = c;
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Coefficients as `p/q` strings, the JSON array serialization.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rat_str).collect()
    }

    /// Inverse of [`TruncatedSeries::to_strings`].
    pub fn parse_strings(parts: &[String]) -> Result<TruncatedSeries, SeriesError> {
        let coeffs: Result<Vec<BigRational>, SeriesError> = parts
            .iter()
            .map(|s| parse_rat(s).ok_or_else(|| SeriesError::BadCoefficient(s.clone())))
            .collect();
        TruncatedSeries::new(coeffs?)
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_strings().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "expected integer coefficient, got {c}");
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn seq_of_single_letter_counts_all_words() {
        // A = z (one object of size 1): seq(A) counts words over one letter.
        let a = TruncatedSeries::monomial(1, 6);
        assert_eq!(ints(&a.seq().unwrap()), [1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn seq_of_two_letters_counts_binary_words() {
        let a = TruncatedSeries::from_integers(&[0, 2, 0, 0, 0]);
        assert_eq!(ints(&a.seq().unwrap()), [1, 2, 4, 8, 16]);
    }

    #[test]
    fn seq_of_z_plus_z2_gives_fibonacci() {
        let a = TruncatedSeries::from_integers(&[0, 1, 1, 0, 0]);
        assert_eq!(ints(&a.seq().unwrap()), [1, 1, 2, 3, 5]);
    }

    #[test]
    fn seq_rejects_nonzero_constant() {
        let a = TruncatedSeries::from_integers(&[1, 1]);
        assert_eq!(a.seq().unwrap_err(), SeriesError::NonzeroConstantTerm);
    }

    #[test]
    fn power_examples() {
        // (z + z^2)^2 = z^2 + 2 z^3 + z^4.
        let a = TruncatedSeries::from_integers(&[0, 1, 1, 0, 0]);
        assert_eq!(ints(&a.power(2)), [0, 0, 1, 2, 1]);
        assert_eq!(ints(&a.power(0)), [1, 0, 0, 0, 0]);
        // (1 + z)^3 binomials.
        let b = TruncatedSeries::from_integers(&[1, 1, 0, 0]);
        assert_eq!(ints(&b.power(3)), [1, 3, 3, 1]);
    }

    #[test]
    fn seq_coefficients_match_exhaustive_word_counts() {
        // Independent oracle: coefficient n of seq(m z) must equal the number
        // of length-n words over m letters, counted by explicit enumeration.
        for m in 1..=4usize {
            let mut a = TruncatedSeries::zero(8);
            a.coeffs[1] = BigRational::from_integer((m as i64).into());
            let s = a.seq().unwrap();
            for n in 0..=8usize {
                let mut count = 0u64;
                let mut odometer = vec![0usize; n];
                loop {
                    count += 1;
                    // Advance the odometer; stop after the last word.
                    let mut pos = n;
                    while pos > 0 {
                        odometer[pos - 1] += 1;
                        if odometer[pos - 1] < m {
                            break;
                        }
                        odometer[pos - 1] = 0;
                        pos -= 1;
                    }
                    if pos == 0 {
                        break;
                    }
                }
                assert_eq!(s.coeff(n), BigRational::from_integer(count.into()));
            }
        }
    }

    #[test]
    fn mul_matches_seq_recurrence() {
        // (1 - A) * seq(A) = 1 exactly, up to the truncation order.
        let a = TruncatedSeries::from_integers(&[0, 3, 1, 4, 1, 5]);
        let s = a.seq().unwrap();
        let one_minus_a = TruncatedSeries::one(5)
            .add(&a.mul(&TruncatedSeries::from_integers(&[-1, 0, 0, 0, 0, 0])).unwrap())
            .unwrap();
        assert_eq!(one_minus_a.mul(&s).unwrap(), TruncatedSeries::one(5));
    }

    #[test]
    fn string_round_trip() {
        let a = TruncatedSeries::parse_strings(&[
            "1/1".to_string(),
            "-3/2".to_string(),
            "5".to_string(),
        ])
        .unwrap();
        assert_eq!(a.to_strings(), ["1", "-3/2", "5"]);
        assert!(TruncatedSeries::parse_strings(&["x".to_string()]).is_err());
        assert_eq!(
            TruncatedSeries::parse_strings(&[]).unwrap_err(),
            SeriesError::EmptyCoefficients
        );
    }

    #[test]
    fn order_mismatch_is_reported() {
        let a = TruncatedSeries::from_integers(&[1, 2]);
        let b = TruncatedSeries::from_integers(&[1, 2, 3]);
        assert_eq!(
            a.add(&b).unwrap_err(),
            SeriesError::OrderMismatch { left: 1, right: 2 }
        );
    }
}
