//! Consecutive-sum polytopes in `[0,1]^n`, their lattice-point counts and
//! Ehrhart data.
//!
//! Every polytope here is the unit box cut by rows `x_{lo+1} + ⋯ + x_{hi} ≤ 1`
//! or `≥ 1`. Dilating by `t` scales both the box and the right-hand sides.

use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclic::{ChainSet, Sign, SignWord};
use crate::error::{domain, integrity, Result};
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::sequences::{binomial, factorial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    AtMost,
    AtLeast,
}

/// `x_{lo+1} + ⋯ + x_{hi}` compared against the dilation factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub lo: usize,
    pub hi: usize,
    pub relation: Relation,
}

impl Constraint {
    pub fn width(&self) -> usize {
        self.hi - self.lo
    }

    fn covers(&self, coord: usize) -> bool {
        self.lo < coord && coord <= self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstraintSystem {
    dim: usize,
    constraints: Vec<Constraint>,
}

impl ConstraintSystem {
    pub fn new(dim: usize, mut constraints: Vec<Constraint>) -> Result<Self> {
        if dim == 0 {
            return Err(domain!("polytope dimension must be at least 1"));
        }
        for c in &constraints {
            if c.lo >= c.hi || c.hi > dim {
                return Err(domain!(
                    "row ({}, {}) outside 0 <= lo < hi <= {dim}",
                    c.lo,
                    c.hi
                ));
            }
        }
        constraints.sort_unstable();
        constraints.dedup();
        Ok(Self { dim, constraints })
    }

    /// `B_{I,n}`: one `≤ 1` row per pair of the chain set.
    pub fn from_chain_set(cs: &ChainSet) -> Self {
        let constraints = cs
            .pairs()
            .iter()
            .map(|&(lo, hi)| Constraint {
                lo,
                hi,
                relation: Relation::AtMost,
            })
            .collect();
        Self::new(cs.n(), constraints).expect("chain set pairs are in range")
    }

    /// `B̂_{k,n}`: every window of `k` consecutive coordinates sums to at most 1.
    pub fn hat(k: usize, n: usize) -> Result<Self> {
        Ok(Self::from_chain_set(&ChainSet::hat(k, n)?))
    }

    /// `B̃_s` in dimension `len(s) + 1`: `x_i + x_{i+1} ≤ 1` for `+`, `≥ 1` for `-`.
    pub fn from_sign_word(s: &SignWord) -> Self {
        let constraints = s
            .signs()
            .iter()
            .enumerate()
            .map(|(i, sign)| Constraint {
                lo: i,
                hi: i + 2,
                relation: match sign {
                    Sign::Plus => Relation::AtMost,
                    Sign::Minus => Relation::AtLeast,
                },
            })
            .collect();
        Self::new(s.len() + 1, constraints).expect("sign word rows are in range")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn is_at_most_only(&self) -> bool {
        self.constraints
            .iter()
            .all(|c| c.relation == Relation::AtMost)
    }

    pub fn max_width(&self) -> usize {
        self.constraints
            .iter()
            .map(Constraint::width)
            .max()
            .unwrap_or(1)
    }

    /// Membership of an integer point in the `t`-th dilation.
    pub fn contains_scaled(&self, x: &[u64], t: u64) -> bool {
        x.len() == self.dim
            && x.iter().all(|&v| v <= t)
            && self.constraints.iter().all(|c| {
                let s: u64 = x[c.lo..c.hi].iter().sum();
                match c.relation {
                    Relation::AtMost => s <= t,
                    Relation::AtLeast => s >= t,
                }
            })
    }
}

/// Counts lattice points in dilations.
///
/// The default path is a sweep over coordinates whose state is the vector of
/// partial sums of the rows that straddle the current coordinate; `≥` rows
/// saturate at `t`. When the number of live states exceeds `state_budget`
/// the counter switches to a pruned depth-first enumeration, which needs no
/// table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeCounter {
    pub state_budget: usize,
}

impl Default for LatticeCounter {
    fn default() -> Self {
        Self {
            state_budget: 1 << 22,
        }
    }
}

/// Per-coordinate bookkeeping shared by both counting strategies.
struct Sweep<'a> {
    sys: &'a ConstraintSystem,
    /// `open[b]`: rows with `lo < b < hi`, i.e. crossing the boundary after coordinate `b`.
    open: Vec<Vec<usize>>,
}

impl<'a> Sweep<'a> {
    fn new(sys: &'a ConstraintSystem) -> Self {
        let open = (0..=sys.dim)
            .map(|b| {
                (0..sys.constraints.len())
                    .filter(|&r| {
                        let c = &sys.constraints[r];
                        c.lo < b && b < c.hi
                    })
                    .collect()
            })
            .collect();
        Self { sys, open }
    }

    /// Rows touching coordinate `m` with their partial sums before placing `x_m`.
    fn touching(&self, m: usize, key: &[u32]) -> Vec<(usize, u64)> {
        let prev = &self.open[m - 1];
        self.sys
            .constraints
            .iter()
            .enumerate()
            .filter(|(_, c)| c.covers(m))
            .map(|(r, _)| {
                let partial = prev
                    .iter()
                    .position(|&p| p == r)
                    .map_or(0, |slot| u64::from(key[slot]));
                (r, partial)
            })
            .collect()
    }

    /// Places `x_m = v`; returns the next key, or `None` if a row fails.
    fn place(&self, m: usize, touching: &[(usize, u64)], v: u64, t: u64) -> Option<Vec<u32>> {
        let next_open = &self.open[m];
        let mut next = alloc::vec![0u32; next_open.len()];
        for &(r, partial) in touching {
            let c = &self.sys.constraints[r];
            let mut s = partial + v;
            match c.relation {
                Relation::AtMost if s > t => return None,
                Relation::AtMost => {}
                Relation::AtLeast => s = s.min(t),
            }
            if c.hi == m {
                if c.relation == Relation::AtLeast && s < t {
                    return None;
                }
            } else {
                let slot = next_open
                    .iter()
                    .position(|&p| p == r)
                    .expect("row stays open");
                next[slot] = s as u32;
            }
        }
        Some(next)
    }

    fn upper(&self, touching: &[(usize, u64)], t: u64) -> u64 {
        touching
            .iter()
            .filter(|(r, _)| self.sys.constraints[*r].relation == Relation::AtMost)
            .map(|&(_, partial)| t.saturating_sub(partial))
            .fold(t, u64::min)
    }
}

impl LatticeCounter {
    pub fn new(state_budget: usize) -> Self {
        Self { state_budget }
    }

    /// `E(P, t) = #(t·P ∩ Z^n)`; `E(P, 0) = 1`.
    pub fn count(&self, sys: &ConstraintSystem, t: u64) -> BigUint {
        if t == 0 {
            return BigUint::one();
        }
        let sweep = Sweep::new(sys);
        match self.count_dp(&sweep, t) {
            Some(c) => c,
            None => count_dfs(&sweep, t),
        }
    }

    fn count_dp(&self, sweep: &Sweep<'_>, t: u64) -> Option<BigUint> {
        let mut states: HashMap<Vec<u32>, BigUint> = HashMap::new();
        states.insert(Vec::new(), BigUint::one());
        for m in 1..=sweep.sys.dim {
            let mut next: HashMap<Vec<u32>, BigUint> = HashMap::with_capacity(states.len());
            for (key, ways) in &states {
                let touching = sweep.touching(m, key);
                for v in 0..=sweep.upper(&touching, t) {
                    if let Some(k) = sweep.place(m, &touching, v, t) {
                        *next.entry(k).or_default() += ways;
                    }
                }
            }
            if next.len() > self.state_budget {
                return None;
            }
            states = next;
        }
        Some(states.into_values().sum())
    }
}

fn count_dfs(sweep: &Sweep<'_>, t: u64) -> BigUint {
    fn go(sweep: &Sweep<'_>, m: usize, key: &[u32], t: u64, acc: &mut BigUint) {
        let touching = sweep.touching(m, key);
        let last = m == sweep.sys.dim;
        for v in 0..=sweep.upper(&touching, t) {
            if let Some(next) = sweep.place(m, &touching, v, t) {
                if last {
                    *acc += 1u32;
                } else {
                    go(sweep, m + 1, &next, t, acc);
                }
            }
        }
    }
    let mut acc = BigUint::zero();
    go(sweep, 1, &[], t, &mut acc);
    acc
}

/// `E(P, t)` with the default counter.
pub fn count_lattice_points(sys: &ConstraintSystem, t: u64) -> BigUint {
    LatticeCounter::default().count(sys, t)
}

/// The dilations whose counts feed [`EhrhartData::from_values`]: `0..=dim+2`.
pub fn required_dilations(sys: &ConstraintSystem) -> core::ops::RangeInclusive<u64> {
    0..=sys.dim as u64 + 2
}

/// Ehrhart polynomial, h*-polynomial and normalized volume of one polytope,
/// all cross-checked against each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartData {
    pub dim: usize,
    /// `E(P, t)` for `t = 0..=dim+2`.
    pub values: Vec<BigUint>,
    pub ehrhart: RatPolynomial,
    pub hstar: IntPolynomial,
    pub normalized_volume: BigUint,
}

impl EhrhartData {
    pub fn compute(sys: &ConstraintSystem, counter: &LatticeCounter) -> Result<Self> {
        let values = required_dilations(sys)
            .map(|t| counter.count(sys, t))
            .collect();
        Self::from_values(sys.dim, values)
    }

    /// Builds everything from `E(P, 0..=dim+2)`. Interpolates through the first
    /// `dim+1` values, checks the last two against the polynomial, and checks
    /// the h*-coefficients and both volume formulas.
    pub fn from_values(dim: usize, values: Vec<BigUint>) -> Result<Self> {
        if values.len() != dim + 3 {
            return Err(domain!(
                "need {} dilation counts, got {}",
                dim + 3,
                values.len()
            ));
        }
        if !values[0].is_one() {
            return Err(integrity!(
                "E(P,0) = {} but the dilation by 0 is a single point",
                values[0]
            ));
        }
        let signed: Vec<BigInt> = values.iter().map(|v| BigInt::from(v.clone())).collect();
        let ehrhart = interpolate(&signed[..=dim]);
        for t in dim + 1..=dim + 2 {
            let predicted = ehrhart.eval_int(t as i64);
            if predicted != BigRational::from_integer(signed[t].clone()) {
                return Err(integrity!(
                    "interpolated Ehrhart polynomial predicts {predicted} at t={t}, counted {}",
                    signed[t]
                ));
            }
        }
        if ehrhart.degree() != Some(dim) || !ehrhart.leading().is_positive() {
            return Err(integrity!(
                "Ehrhart polynomial has degree {:?}, expected {dim}",
                ehrhart.degree()
            ));
        }
        let hstar = hstar_transform(dim, &signed[..=dim]);
        if let Some((j, c)) = hstar
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| c.is_negative())
        {
            return Err(integrity!("h* coefficient {j} is negative ({c})"));
        }
        let from_hstar = hstar.eval_one();
        let from_leading =
            ehrhart.leading() * BigRational::from_integer(BigInt::from(factorial(dim)));
        if BigRational::from_integer(from_hstar.clone()) != from_leading {
            return Err(integrity!(
                "normalized volume mismatch: h*(1) = {from_hstar}, n!·leading = {from_leading}"
            ));
        }
        let normalized_volume = from_hstar.to_biguint().expect("checked nonnegative");
        Ok(Self {
            dim,
            values,
            ehrhart,
            hstar,
            normalized_volume,
        })
    }

    pub fn is_palindromic(&self) -> bool {
        self.hstar.is_palindromic()
    }
}

/// Newton forward-difference interpolation through `(t, values[t])`, `t = 0..len`.
fn interpolate(values: &[BigInt]) -> RatPolynomial {
    let len = values.len();
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(len);
    for j in 0..len {
        leading.push(diffs[0].clone());
        for i in 0..len - 1 - j {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    // Σ_j Δ^j E(0) · t(t-1)…(t-j+1) / j!
    let mut coeffs = alloc::vec![BigRational::zero(); len];
    let mut falling: Vec<BigInt> = alloc::vec![BigInt::one()];
    for (j, delta) in leading.iter().enumerate() {
        let scale = BigRational::new(delta.clone(), BigInt::from(factorial(j)));
        for (deg, c) in falling.iter().enumerate() {
            coeffs[deg] += &scale * BigRational::from_integer(c.clone());
        }
        // multiply the falling factorial by (t - j)
        let mut next = alloc::vec![BigInt::zero(); falling.len() + 1];
        for (deg, c) in falling.iter().enumerate() {
            next[deg + 1] += c;
            next[deg] -= c * BigInt::from(j);
        }
        falling = next;
    }
    RatPolynomial::new(coeffs)
}

/// `h*_j = Σ_{i=0}^{j} (-1)^i C(dim+1, i) E(j-i)` for `j = 0..=dim`.
fn hstar_transform(dim: usize, values: &[BigInt]) -> IntPolynomial {
    let coeffs = (0..=dim)
        .map(|j| {
            (0..=j).fold(BigInt::zero(), |acc, i| {
                let term = BigInt::from(binomial(dim as u64 + 1, i as u64)) * &values[j - i];
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    IntPolynomial::new(coeffs)
}

pub fn ehrhart_polynomial(sys: &ConstraintSystem) -> Result<RatPolynomial> {
    Ok(EhrhartData::compute(sys, &LatticeCounter::default())?.ehrhart)
}

pub fn hstar(sys: &ConstraintSystem) -> Result<IntPolynomial> {
    Ok(EhrhartData::compute(sys, &LatticeCounter::default())?.hstar)
}

/// h*-polynomial of the half-open variant (strict row inequalities, `x_i < 1`).
/// Only defined for systems with `≤` rows, where it equals `z · h*`.
pub fn hstar_halfopen(sys: &ConstraintSystem) -> Result<IntPolynomial> {
    if !sys.is_at_most_only() {
        return Err(domain!(
            "half-open h* is only defined for systems with <= rows"
        ));
    }
    Ok(hstar(sys)?.shift())
}

pub fn normalized_volume(sys: &ConstraintSystem) -> Result<BigUint> {
    Ok(EhrhartData::compute(sys, &LatticeCounter::default())?.normalized_volume)
}

pub fn is_palindromic(p: &IntPolynomial) -> bool {
    p.is_palindromic()
}
