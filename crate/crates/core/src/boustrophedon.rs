//! Simplex-shaped arrays and the operators `Ψ` (partial sums through `τ`) and
//! `Ω` (cyclic rotation of indices) whose alternation refines `#Â_{k,n}` by
//! arc lengths.
//!
//! An array over `T_N^d` holds one value per composition of `N` into `d + 1`
//! positive parts, stored densely in lexicographic order of the parts.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cyclic::{ChainSet, CyclicWord, Orders};
use crate::error::{domain, integrity, Result};

/// Compositions of `total` into `parts` positive parts.
fn compositions(total: usize, parts: usize) -> usize {
    if parts == 0 {
        return usize::from(total == 0);
    }
    if total < parts {
        return 0;
    }
    small_binomial(total - 1, parts - 1)
}

fn small_binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (1..=k).fold(1usize, |acc, i| acc * (n - k + i) / i)
}

/// `|T_N^d| = C(N-1, d)`.
pub fn simplex_size(d: usize, order: usize) -> usize {
    compositions(order, d + 1)
}

/// An element `(i_1, …, i_{d+1})` of `T_N^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexIndex(pub Vec<usize>);

impl SimplexIndex {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_valid(&self) -> bool {
        self.0.len() >= 2 && self.0.iter().all(|&p| p >= 1)
    }

    /// Every element of `T_N^d` in lexicographic order.
    pub fn all(d: usize, order: usize) -> Vec<SimplexIndex> {
        fn go(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<SimplexIndex>) {
            if slots == 1 {
                if rest >= 1 {
                    cur.push(rest);
                    out.push(SimplexIndex(cur.clone()));
                    cur.pop();
                }
                return;
            }
            for v in 1..rest.saturating_sub(slots - 2) {
                cur.push(v);
                go(rest - v, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::with_capacity(simplex_size(d, order));
        go(order, d + 1, &mut Vec::with_capacity(d + 1), &mut out);
        out
    }

    /// Position in the lexicographic listing of `T_N^d`.
    pub fn rank(&self) -> usize {
        let mut rest = self.order();
        let mut slots = self.0.len();
        let mut r = 0;
        for &p in &self.0[..self.0.len() - 1] {
            for v in 1..p {
                r += compositions(rest - v, slots - 1);
            }
            rest -= p;
            slots -= 1;
        }
        r
    }
}

/// The set `τ(i) ⊂ T_N^d` for `i ∈ T_{N+1}^d`: first part `i'_1` in
/// `1..i_1`, last part `i_{d+1} + i_1 - i'_1 - 1`, middle parts unchanged.
pub fn tau(idx: &SimplexIndex) -> Vec<SimplexIndex> {
    let p = idx.parts();
    let last = p.len() - 1;
    (1..p[0])
        .map(|first| {
            let mut q = p.to_vec();
            q[0] = first;
            q[last] = p[last] + p[0] - first - 1;
            SimplexIndex(q)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexArray {
    d: usize,
    order: usize,
    values: Vec<BigUint>,
}

impl SimplexArray {
    pub fn new(d: usize, order: usize, values: Vec<BigUint>) -> Result<Self> {
        if d < 1 || order < d + 1 {
            return Err(domain!(
                "T_N^d needs d >= 1 and N >= d+1 (d={d}, N={order})"
            ));
        }
        if values.len() != simplex_size(d, order) {
            return Err(domain!(
                "T_{order}^{d} has {} entries, got {}",
                simplex_size(d, order),
                values.len()
            ));
        }
        Ok(Self { d, order, values })
    }

    pub fn zeros(d: usize, order: usize) -> Result<Self> {
        Self::new(
            d,
            order,
            alloc::vec![BigUint::zero(); simplex_size(d, order)],
        )
    }

    /// The one-entry array on `T_{d+1}^d` holding 1.
    pub fn unit(d: usize) -> Result<Self> {
        Self::new(d, d + 1, alloc::vec![BigUint::one()])
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn get(&self, idx: &SimplexIndex) -> Option<&BigUint> {
        (idx.is_valid() && idx.dim() == self.d && idx.order() == self.order)
            .then(|| &self.values[idx.rank()])
    }

    /// `(index, value)` pairs in lexicographic index order.
    pub fn entries(&self) -> impl Iterator<Item = (SimplexIndex, &BigUint)> {
        SimplexIndex::all(self.d, self.order)
            .into_iter()
            .zip(self.values.iter())
    }

    pub fn total(&self) -> BigUint {
        self.values.iter().sum()
    }
}

/// `Ψ`: `c_i = Σ_{i' ∈ τ(i)} b_{i'}`, mapping `T_N^d` to `T_{N+1}^d`.
///
/// Uses `c(i_1, m, e) = c(i_1 - 1, m, e + 1) + b(i_1 - 1, m, e)`, so each
/// entry costs one addition once its lexicographic predecessor is known.
pub fn psi(b: &SimplexArray) -> SimplexArray {
    let d = b.d;
    let order = b.order + 1;
    let indices = SimplexIndex::all(d, order);
    let mut values: Vec<BigUint> = Vec::with_capacity(indices.len());
    for idx in &indices {
        let p = idx.parts();
        if p[0] == 1 {
            values.push(BigUint::zero());
            continue;
        }
        let mut prev = p.to_vec();
        prev[0] -= 1;
        prev[d] += 1;
        let mut src = p.to_vec();
        src[0] -= 1;
        let v = &values[SimplexIndex(prev).rank()] + &b.values[SimplexIndex(src).rank()];
        values.push(v);
    }
    SimplexArray { d, order, values }
}

/// `Ψ` computed literally from the `τ` sets.
pub fn psi_via_tau(b: &SimplexArray) -> SimplexArray {
    let order = b.order + 1;
    let values = SimplexIndex::all(b.d, order)
        .iter()
        .map(|idx| tau(idx).iter().map(|j| &b.values[j.rank()]).sum())
        .collect();
    SimplexArray {
        d: b.d,
        order,
        values,
    }
}

/// `Ω`: `c_{(i_1,…,i_{d+1})} = b_{(i_{d+1}, i_1, …, i_d)}`.
pub fn omega(b: &SimplexArray) -> SimplexArray {
    let values = SimplexIndex::all(b.d, b.order)
        .into_iter()
        .map(|SimplexIndex(mut p)| {
            p.rotate_right(1);
            b.values[SimplexIndex(p).rank()].clone()
        })
        .collect();
    SimplexArray {
        d: b.d,
        order: b.order,
        values,
    }
}

/// `L_π(i, j) = 1 + #{h : (i, h, j) ∈ π}`.
pub fn arc_length(w: &CyclicWord, i: usize, j: usize) -> Result<usize> {
    if i > w.n() || j > w.n() {
        return Err(domain!("arc endpoints must lie in 0..={}", w.n()));
    }
    if i == j {
        return Err(domain!("arc endpoints must differ"));
    }
    Ok(w.offset(i, j))
}

/// The arc-length class of `w ∈ Â_{k,n}`: the lengths of the arcs joining
/// `n+1-k, …, n` in turn and closing back from `n` to `n+1-k`.
pub fn arc_length_class(w: &CyclicWord, k: usize) -> Result<SimplexIndex> {
    let n = w.n();
    if k < 2 || k > n {
        return Err(domain!(
            "arc-length classes need 2 <= k <= n (k={k}, n={n})"
        ));
    }
    let mut parts = Vec::with_capacity(k);
    for j in 1..k {
        parts.push(arc_length(w, n + j - k, n + 1 + j - k)?);
    }
    parts.push(arc_length(w, n, n + 1 - k)?);
    Ok(SimplexIndex(parts))
}

/// Arc-length-refined counts of `Â_{k,n}` from the recurrence: start with the
/// unit array on `T_k^{k-1}` and apply `Ω ∘ Ψ` a total of `n - k + 1` times.
pub fn refined_array(k: usize, n: usize) -> Result<SimplexArray> {
    if k < 2 {
        return Err(domain!("the boustrophedon needs k >= 2; k = 1 gives n!"));
    }
    if k > n {
        return Err(domain!("the boustrophedon needs k <= n (k={k}, n={n})"));
    }
    let d = k - 1;
    let mut a = SimplexArray::unit(d)?;
    for _ in 0..=n - k {
        a = omega(&psi(&a));
        if a.values.len() != simplex_size(d, a.order) {
            return Err(integrity!("array on T_{}^{d} has the wrong size", a.order));
        }
    }
    Ok(a)
}

/// `#Â_{k,n}` as the sum of the refined array.
pub fn count_boustrophedon(k: usize, n: usize) -> Result<BigUint> {
    Ok(refined_array(k, n)?.total())
}

/// Arc-length class sizes by enumerating `Â_{k,n}` directly.
pub fn arc_length_class_sizes(k: usize, n: usize) -> Result<SimplexArray> {
    let cs = ChainSet::hat(k, n)?;
    let mut out = SimplexArray::zeros(k - 1, n + 1)?;
    for w in Orders::new(n)?.filter(|w| cs.contains_order(w)) {
        let idx = arc_length_class(&w, k)?;
        out.values[idx.rank()] += 1u32;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn arc_length_examples() {
        let w = CyclicWord::new(vec![0, 3, 5, 1, 6, 2, 4]).unwrap();
        assert_eq!(arc_length(&w, 3, 5).unwrap(), 1);
        assert_eq!(arc_length(&w, 3, 2).unwrap(), 4);
        assert_eq!(arc_length(&w, 2, 3).unwrap(), 3);
        for i in 0..=6 {
            for j in 0..=6 {
                if i != j {
                    assert_eq!(
                        arc_length(&w, i, j).unwrap() + arc_length(&w, j, i).unwrap(),
                        7
                    );
                }
            }
        }
        assert!(arc_length(&w, 2, 2).is_err());
    }

    #[test]
    fn tau_examples() {
        assert!(tau(&SimplexIndex(vec![1, 2, 4])).is_empty());
        assert_eq!(
            tau(&SimplexIndex(vec![4, 2, 1])),
            vec![
                SimplexIndex(vec![1, 2, 3]),
                SimplexIndex(vec![2, 2, 2]),
                SimplexIndex(vec![3, 2, 1])
            ]
        );
        assert!(tau(&SimplexIndex(vec![1, 5])).is_empty());
    }

    #[test]
    fn ranks_follow_listing() {
        for d in 1..=4 {
            for order in d + 1..d + 7 {
                let all = SimplexIndex::all(d, order);
                assert_eq!(all.len(), simplex_size(d, order));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                for (r, idx) in all.iter().enumerate() {
                    assert_eq!(idx.rank(), r);
                }
            }
        }
    }

    #[test]
    fn one_dimensional_operators() {
        // partial sums starting from the empty sum, then the mirror image
        let row = SimplexArray::new(1, 4, ints(&[2, 1, 0])).unwrap();
        let summed = psi(&row);
        assert_eq!(summed.values(), &ints(&[0, 2, 3, 3])[..]);
        assert_eq!(omega(&summed).values(), &ints(&[3, 3, 2, 0])[..]);
    }

    #[test]
    fn two_dimensional_psi_adds_zero_tip() {
        let b = SimplexArray::new(2, 4, ints(&[1, 2, 3])).unwrap();
        let c = psi(&b);
        assert_eq!(c, psi_via_tau(&b));
        // the index (1,1,3) has empty τ
        assert_eq!(c.get(&SimplexIndex(vec![1, 1, 3])), Some(&BigUint::zero()));
    }

    #[test]
    fn omega_has_order_d_plus_one() {
        let b = SimplexArray::new(2, 6, (0..10u32).map(BigUint::from).collect()).unwrap();
        let mut c = b.clone();
        for _ in 0..3 {
            c = omega(&c);
        }
        assert_eq!(c, b);
        assert_ne!(omega(&b), b);
    }

    #[test]
    fn counts() {
        assert_eq!(count_boustrophedon(2, 4).unwrap(), BigUint::from(5u32));
        assert_eq!(count_boustrophedon(3, 6).unwrap(), BigUint::from(14u32));
        assert_eq!(count_boustrophedon(2, 7).unwrap(), BigUint::from(272u32));
        assert!(count_boustrophedon(1, 4).is_err());
        assert!(count_boustrophedon(5, 4).is_err());
    }

    #[test]
    fn refined_matches_enumeration_small() {
        for n in 2..=6 {
            for k in 2..=n {
                assert_eq!(
                    refined_array(k, n).unwrap(),
                    arc_length_class_sizes(k, n).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn validation() {
        assert!(SimplexArray::new(0, 3, vec![]).is_err());
        assert!(SimplexArray::new(2, 4, ints(&[1, 2])).is_err());
        let a = SimplexArray::zeros(2, 5).unwrap();
        assert_eq!(a.get(&SimplexIndex(vec![1, 1, 2])), None);
        assert_eq!(a.get(&SimplexIndex(vec![0, 2, 3])), None);
    }
}
