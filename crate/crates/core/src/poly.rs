//! Dense univariate polynomials with exact coefficients.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree first.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient vector and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
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

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::new(alloc::vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// Sum of the coefficients, i.e. the value at `z = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiply by `z`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// True iff `a_h = a_{d-h}` for every `h`, where `d` is the degree.
    /// The zero polynomial counts as palindromic.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders highest degree first, e.g. `z^3+7z^2+7z+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut term = String::new();
            if c.is_negative() {
                term.push('-');
            } else if !first {
                term.push('+');
            }
            let mag = c.abs();
            if deg == 0 || !mag.is_one() {
                term.push_str(&alloc::format!("{mag}"));
            }
            match deg {
                0 => {}
                1 => term.push('z'),
                _ => term.push_str(&alloc::format!("z^{deg}")),
            }
            f.write_str(&term)?;
            first = false;
        }
        Ok(())
    }
}

/// Polynomial with exact rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigRational {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(t)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPolynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPolynomial::from_i64s(&[0, 0]).degree(), None);
    }

    #[test]
    fn palindromes() {
        assert!(IntPolynomial::from_i64s(&[1, 7, 7, 1]).is_palindromic());
        assert!(IntPolynomial::one().is_palindromic());
        assert!(!IntPolynomial::from_i64s(&[3, 2, 1]).is_palindromic());
    }

    #[test]
    fn display_matches_table_notation() {
        assert_eq!(
            IntPolynomial::from_i64s(&[1, 7, 7, 1]).to_string(),
            "z^3+7z^2+7z+1"
        );
        assert_eq!(IntPolynomial::from_i64s(&[1, 1]).to_string(), "z+1");
        assert_eq!(IntPolynomial::from_i64s(&[0, 1]).to_string(), "z");
        assert_eq!(
            IntPolynomial::from_i64s(&[-1, 0, -2]).to_string(),
            "-2z^2-1"
        );
        assert_eq!(IntPolynomial::default().to_string(), "0");
    }

    #[test]
    fn shift_and_eval() {
        let p = IntPolynomial::from_i64s(&[1, 4, 1]);
        assert_eq!(p.shift(), IntPolynomial::from_i64s(&[0, 1, 4, 1]));
        assert_eq!(p.eval_one(), BigInt::from(6));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(13));
    }
}
