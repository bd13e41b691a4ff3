//! Nondecreasing parking functions and the bijection with `Â_{n,2n}` that
//! turns descents into ascents.

use alloc::vec::Vec;
use core::fmt;

use crate::cyclic::{ChainSet, CyclicWord};
use crate::error::{domain, integrity, Result};

/// `(p_0, …, p_n)` with `p_i ≤ p_{i+1}` and `0 ≤ p_i ≤ i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction(Vec<usize>);

impl ParkingFunction {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(domain!("a parking function has at least one entry"));
        }
        if entries.iter().enumerate().any(|(i, &p)| p > i) {
            return Err(domain!("entries must satisfy p_i <= i: {entries:?}"));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(domain!("entries must be nondecreasing: {entries:?}"));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `n`, one less than the number of entries.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    /// Positions `i` with `p_i < p_{i+1}`.
    pub fn ascents(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] < w[1]).count()
    }
}

impl fmt::Display for ParkingFunction {
    /// CSV form `p0,p1,…,pn`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::cyclic::join_letters(&self.0, ","))
    }
}

/// All nondecreasing parking functions with `n + 1` entries, lexicographic.
pub fn enumerate_parking(n: usize) -> Vec<ParkingFunction> {
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<ParkingFunction>) {
        let i = cur.len();
        if i == n + 1 {
            out.push(ParkingFunction(cur.clone()));
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for p in lo..=i {
            cur.push(p);
            go(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

/// Number of parking functions with `n + 1` entries by ascent count.
pub fn ascents_tally(n: usize) -> Vec<u64> {
    let mut tally = alloc::vec![0u64; n + 1];
    for p in enumerate_parking(n) {
        tally[p.ascents()] += 1;
    }
    tally
}

/// `H_n`: for each `i`, the first small number (one of `0..=n`) to the right
/// of `n + i` in the word, or `0` when there is none.
pub fn parking_of_order(w: &CyclicWord) -> Result<ParkingFunction> {
    let total = w.n();
    if !total.is_multiple_of(2) {
        return Err(domain!("expected an order on 0..=2n, got 0..={total}"));
    }
    let n = total / 2;
    if n >= 1 && !ChainSet::hat(n, total)?.contains_order(w) {
        return Err(domain!(
            "order {w} is not in the class for k={n}, n={total}"
        ));
    }
    let letters = w.letters();
    let entries = (0..=n)
        .map(|i| {
            let start = w.position(n + i).expect("letter present");
            letters[start + 1..]
                .iter()
                .copied()
                .find(|&x| x <= n)
                .unwrap_or(0)
        })
        .collect();
    ParkingFunction::new(entries)
        .map_err(|e| integrity!("H_n produced an invalid parking function: {e}"))
}

/// Inverse of [`parking_of_order`]. Small numbers go around the circle in
/// order; `n + i` sits in the gap just before `p_i`, or after `n` when
/// `p_i = 0`, with each gap filled in increasing order.
pub fn order_of_parking(p: &ParkingFunction) -> CyclicWord {
    let n = p.n();
    let mut gaps: Vec<Vec<usize>> = alloc::vec![Vec::new(); n + 1];
    for (i, &q) in p.entries().iter().enumerate().skip(1) {
        gaps[q].push(n + i);
    }
    let mut letters = Vec::with_capacity(2 * n + 1);
    for small in 0..=n {
        if small > 0 {
            letters.extend_from_slice(&gaps[small]);
        }
        letters.push(small);
    }
    letters.extend_from_slice(&gaps[0]);
    CyclicWord::new(letters).expect("construction yields a permutation starting at 0")
}

/// Collapses `w ∈ Â_{k,n}` with `2k > n` to an element of `Â_{m,2m}`, `m = n - k`:
/// the run `m, m+1, …, k` becomes the single letter `m` and letters above `k`
/// shift down by `2k - n`. For `k = n` the result is the one-letter word `(0)`.
pub fn contract(w: &CyclicWord, k: usize) -> Result<CyclicWord> {
    let n = w.n();
    if k < 1 || k > n || 2 * k <= n {
        return Err(domain!("contraction needs n/2 < k <= n (k={k}, n={n})"));
    }
    if !ChainSet::hat(k, n)?.contains_order(w) {
        return Err(domain!("order {w} is not in the class for k={k}, n={n}"));
    }
    let m = n - k;
    let letters = w.letters();
    let start = w.position(m).expect("letter present");
    let run_ok = (m..=k)
        .enumerate()
        .all(|(r, x)| letters.get(start + r) == Some(&x));
    if !run_ok {
        return Err(integrity!("letters {m}..={k} are not consecutive in {w}"));
    }
    let out = letters
        .iter()
        .filter_map(|&x| match x {
            x if x < m => Some(x),
            x if x == m => Some(m),
            x if x <= k => None,
            x => Some(x + m - k),
        })
        .collect();
    CyclicWord::new(out).map_err(|e| integrity!("contraction produced an invalid word: {e}"))
}
