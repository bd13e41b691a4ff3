//! Closed forms and classical recurrences for the named sequences. These stay
//! independent of the counting pipelines so agreement with them means something.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::poly::IntPolynomial;

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // exact at every step: the running value is C(n-k+i, i)
    (1..=k).fold(BigUint::one(), |acc, i| acc * (n - k + i) / i)
}

/// Euler up/down number `E_n` via the Seidel boustrophedon: each row is the
/// running sum of the previous row read backwards, starting from 0.
pub fn euler_updown(n: usize) -> BigUint {
    let mut row = alloc::vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::zero());
        for x in row.iter().rev() {
            let s = next.last().expect("non-empty") + x;
            next.push(s);
        }
        row = next;
    }
    row.pop().expect("rows are never empty")
}

/// Eulerian polynomial `Σ_{σ ∈ S_n} z^{des(σ)}` from
/// `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`.
pub fn eulerian_polynomial(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(domain!("Eulerian polynomial needs n >= 1"));
    }
    let mut row = alloc::vec![BigInt::one()];
    for m in 2..=n {
        let mut next = alloc::vec![BigInt::zero(); m];
        for (k, slot) in next.iter_mut().enumerate() {
            if k < row.len() {
                *slot += BigInt::from(k + 1) * &row[k];
            }
            if k >= 1 {
                *slot += BigInt::from(m - k) * &row[k - 1];
            }
        }
        row = next;
    }
    Ok(IntPolynomial::new(row))
}

/// `N(n,k) = C(n,k) C(n,k-1) / n` for `1 ≤ k ≤ n`.
pub fn narayana(n: usize, k: usize) -> Result<BigUint> {
    if k < 1 || k > n {
        return Err(domain!("Narayana number N({n},{k}) needs 1 <= k <= n"));
    }
    let (n64, k64) = (n as u64, k as u64);
    Ok(binomial(n64, k64) * binomial(n64, k64 - 1) / n64)
}

/// `Q_n(z) = Σ_{k=1}^{n} N(n,k) z^{k-1}`.
pub fn narayana_polynomial(n: usize) -> Result<IntPolynomial> {
    if n < 1 {
        return Err(domain!("Narayana polynomial needs n >= 1"));
    }
    (1..=n)
        .map(|k| narayana(n, k).map(BigInt::from))
        .collect::<Result<Vec<_>>>()
        .map(IntPolynomial::new)
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n as u64, n as u64) / (n as u64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_numbers() {
        let expected = [1u32, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(euler_updown(n), BigUint::from(e), "E_{n}");
        }
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian_polynomial(1).unwrap(), IntPolynomial::one());
        assert_eq!(
            eulerian_polynomial(3).unwrap(),
            IntPolynomial::from_i64s(&[1, 4, 1])
        );
        assert_eq!(
            eulerian_polynomial(5).unwrap(),
            IntPolynomial::from_i64s(&[1, 26, 66, 26, 1])
        );
        assert!(eulerian_polynomial(0).is_err());
        for n in 1..=8 {
            assert_eq!(
                eulerian_polynomial(n).unwrap().eval_one(),
                BigInt::from(factorial(n))
            );
        }
    }

    #[test]
    fn narayana_examples() {
        assert_eq!(narayana(4, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(narayana_polynomial(1).unwrap(), IntPolynomial::one());
        assert_eq!(catalan(4), BigUint::from(14u32));
        assert_eq!(narayana_polynomial(4).unwrap().eval_one(), BigInt::from(14));
        assert!(narayana(4, 0).is_err());
        assert!(narayana(4, 5).is_err());
        for n in 1..=12 {
            let q = narayana_polynomial(n).unwrap();
            assert!(q.is_palindromic());
            assert_eq!(q.eval_one(), BigInt::from(catalan(n)));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(7), BigUint::from(5040u32));
    }
}
