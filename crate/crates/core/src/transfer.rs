//! The piecewise-linear transfer map `x ↦ (x_1 + ⋯ + x_i mod 1)_i` on
//! `[0,1)^n`, its inverse, and the standardizations that turn a point into a
//! permutation or a cyclic word. All arithmetic is exact.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclic::{ChainSet, CyclicWord, SignWord};
use crate::error::{domain, Result};
use crate::polytope::{ConstraintSystem, Relation};

/// A point of `[0,1)^n` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint(Vec<BigRational>);

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if let Some(c) = coords
            .iter()
            .find(|c| c.is_negative() || **c >= BigRational::one())
        {
            return Err(domain!("coordinate {c} outside [0,1)"));
        }
        Ok(Self(coords))
    }

    /// From `(numerator, denominator)` pairs.
    pub fn from_fractions(coords: &[(i64, i64)]) -> Result<Self> {
        if coords.iter().any(|&(_, q)| q == 0) {
            return Err(domain!("zero denominator"));
        }
        Self::new(
            coords
                .iter()
                .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Membership in `X_n`: every coordinate in `(0,1)` and no sum of
    /// consecutive coordinates is an integer.
    pub fn is_generic(&self) -> bool {
        let x = &self.0;
        if x.iter().any(Zero::is_zero) {
            return false;
        }
        (0..x.len()).all(|i| {
            let mut s = BigRational::zero();
            x[i..].iter().all(|c| {
                s += c;
                !s.is_integer()
            })
        })
    }

    /// Membership in `Y_n`: coordinates in `(0,1)` and pairwise distinct.
    pub fn has_distinct_coords(&self) -> bool {
        let x = &self.0;
        !x.iter().any(Zero::is_zero) && (0..x.len()).all(|i| (i + 1..x.len()).all(|j| x[i] != x[j]))
    }

    /// Whether `t · self` has integer coordinates.
    pub fn is_integral_after_scaling(&self, t: u64) -> bool {
        let t = BigRational::from_integer(BigInt::from(t));
        self.0.iter().all(|c| (c * &t).is_integer())
    }
}

fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// `y_i = frac(x_1 + ⋯ + x_i)`.
pub fn forward(x: &RationalPoint) -> RationalPoint {
    let mut s = BigRational::zero();
    RationalPoint(
        x.0.iter()
            .map(|c| {
                s = frac(&(&s + c));
                s.clone()
            })
            .collect(),
    )
}

/// `x_1 = y_1`, `x_i = y_i - y_{i-1}` if nonnegative, else `1 + y_i - y_{i-1}`.
pub fn inverse(y: &RationalPoint) -> RationalPoint {
    let mut prev = BigRational::zero();
    RationalPoint(
        y.0.iter()
            .map(|c| {
                let d = c - &prev;
                prev = c.clone();
                if d.is_negative() {
                    d + BigRational::one()
                } else {
                    d
                }
            })
            .collect(),
    )
}

/// Indices `1..=n` sorted by coordinate, ties broken by index.
fn sorted_indices(y: &RationalPoint) -> Vec<usize> {
    let mut idx: Vec<usize> = (1..=y.dim()).collect();
    idx.sort_by(|&a, &b| y.0[a - 1].cmp(&y.0[b - 1]).then(a.cmp(&b)));
    idx
}

/// The permutation `σ` (one-line, values `1..=n`) with `σ(i) > σ(j)` iff
/// `y_i > y_j` for `i < j`. Equal coordinates keep index order.
pub fn standardization(y: &RationalPoint) -> Vec<usize> {
    let mut sigma = alloc::vec![0; y.dim()];
    for (rank, i) in sorted_indices(y).into_iter().enumerate() {
        sigma[i - 1] = rank + 1;
    }
    sigma
}

/// `0` followed by `σ^{-1}(1), …, σ^{-1}(n)` for `σ` the standardization.
pub fn cyclic_standardization(y: &RationalPoint) -> CyclicWord {
    let mut letters = Vec::with_capacity(y.dim() + 1);
    letters.push(0);
    letters.extend(sorted_indices(y));
    CyclicWord::new(letters).expect("sorted indices form a permutation")
}

/// Closed membership in `B_{I,n}` (coordinates already lie in `[0,1)`).
pub fn in_chain_polytope(cs: &ChainSet, x: &RationalPoint) -> bool {
    x.dim() == cs.n()
        && cs
            .pairs()
            .iter()
            .all(|&(i, j)| interval_sum(x, i, j) <= BigRational::one())
}

/// Membership in the half-open `B'_{I,n}`: every row sum strictly below 1.
pub fn in_half_open_chain_polytope(cs: &ChainSet, x: &RationalPoint) -> bool {
    x.dim() == cs.n()
        && cs
            .pairs()
            .iter()
            .all(|&(i, j)| interval_sum(x, i, j) < BigRational::one())
}

fn interval_sum(x: &RationalPoint, lo: usize, hi: usize) -> BigRational {
    x.0[lo..hi].iter().sum()
}

/// `[x ∈ B_{I,n}]` agrees with `[cs(F(x)) ∈ A_{I,n}]`. Requires `x ∈ X_n`.
pub fn verify_correspondence(cs: &ChainSet, x: &RationalPoint) -> Result<bool> {
    if x.dim() != cs.n() {
        return Err(domain!(
            "point has dimension {}, chain set has n={}",
            x.dim(),
            cs.n()
        ));
    }
    if !x.is_generic() {
        return Err(crate::Error::Precondition(
            "point is not generic: some consecutive sum is an integer".into(),
        ));
    }
    let word = cyclic_standardization(&forward(x));
    Ok(in_chain_polytope(cs, x) == cs.contains_order(&word))
}

/// The same agreement for the half-open polytope; no genericity needed.
pub fn verify_half_open_correspondence(cs: &ChainSet, x: &RationalPoint) -> Result<bool> {
    if x.dim() != cs.n() {
        return Err(domain!(
            "point has dimension {}, chain set has n={}",
            x.dim(),
            cs.n()
        ));
    }
    let word = cyclic_standardization(&forward(x));
    Ok(in_half_open_chain_polytope(cs, x) == cs.contains_order(&word))
}

/// `[x ∈ B̃_s]` agrees with `[cs(F(x)) ∈ Ã_s]` for generic `x` of dimension `len(s)+1`.
pub fn verify_sign_correspondence(s: &SignWord, x: &RationalPoint) -> Result<bool> {
    let sys = ConstraintSystem::from_sign_word(s);
    if x.dim() != sys.dim() {
        return Err(domain!(
            "point has dimension {}, expected {}",
            x.dim(),
            sys.dim()
        ));
    }
    if !x.is_generic() {
        return Err(crate::Error::Precondition(
            "point is not generic: some consecutive sum is an integer".into(),
        ));
    }
    let inside = sys.constraints().iter().all(|c| {
        let sum = interval_sum(x, c.lo, c.hi);
        match c.relation {
            Relation::AtMost => sum <= BigRational::one(),
            Relation::AtLeast => sum >= BigRational::one(),
        }
    });
    let word = cyclic_standardization(&forward(x));
    Ok(inside == s.contains_order(&word))
}
