//! Parallel drivers around the core counting routines.
//!
//! Work is split into fixed pieces (one per dilation, one per word prefix)
//! and recombined in a fixed order, so results do not depend on the number
//! of threads.

use cyclic_polytope::cyclic::{
    chain_class_tally, sign_class_tally, tally_to_polynomial, ChainSet, CyclicWord, Orders,
    SignWord,
};
use cyclic_polytope::polytope::{
    required_dilations, ConstraintSystem, EhrhartData, LatticeCounter,
};
use cyclic_polytope::{IntPolynomial, Result};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Engine {
    /// Worker threads; `0` lets rayon decide.
    pub threads: usize,
    pub counter: LatticeCounter,
}

impl Engine {
    pub fn new(threads: usize, dp_budget: usize) -> Self {
        Self {
            threads,
            counter: LatticeCounter::new(dp_budget),
        }
    }

    /// Runs `f` inside a pool sized by the thread budget.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.threads == 0 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }

    /// Ehrhart data with one task per dilation.
    pub fn ehrhart(&self, sys: &ConstraintSystem) -> Result<EhrhartData> {
        let dilations: Vec<u64> = required_dilations(sys).collect();
        let values = dilations
            .par_iter()
            .map(|&t| self.counter.count(sys, t))
            .collect();
        EhrhartData::from_values(sys.dim(), values)
    }

    /// `E(P, t)` for `t = 0..=bound`.
    pub fn lattice_counts(&self, sys: &ConstraintSystem, bound: u64) -> Vec<num_bigint::BigUint> {
        (0..=bound)
            .into_par_iter()
            .map(|t| self.counter.count(sys, t))
            .collect()
    }

    /// Descent polynomial of `A_{I,n}`.
    pub fn chain_class_polynomial(&self, cs: &ChainSet) -> Result<IntPolynomial> {
        let tally = par_tally(cs.n(), |prefix| chain_class_tally(cs, prefix))?;
        Ok(tally_to_polynomial(&tally))
    }

    /// Descent polynomial of `Ã_s`.
    pub fn sign_class_polynomial(&self, s: &SignWord) -> Result<IntPolynomial> {
        let tally = par_tally(s.len() + 1, |prefix| sign_class_tally(s, prefix))?;
        Ok(tally_to_polynomial(&tally))
    }

    /// Words of `{0,…,n}` accepted by `keep`, in lexicographic order.
    pub fn words(
        &self,
        n: usize,
        keep: impl Fn(&CyclicWord) -> bool + Sync,
    ) -> Result<Vec<CyclicWord>> {
        let chunks = prefixes(n)
            .par_iter()
            .map(|prefix| {
                Ok(Orders::with_prefix(n, prefix)?
                    .filter(|w| keep(w))
                    .collect::<Vec<_>>())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(chunks.into_iter().flatten().collect())
    }
}

/// Two-letter prefixes `[0, a]`, which partition the words of `{0,…,n}`.
fn prefixes(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![0]];
    }
    (1..=n).map(|a| vec![0, a]).collect()
}

fn par_tally(n: usize, tally: impl Fn(&[usize]) -> Result<Vec<u64>> + Sync) -> Result<Vec<u64>> {
    let parts = prefixes(n)
        .par_iter()
        .map(|p| tally(p))
        .collect::<Result<Vec<_>>>()?;
    let mut total = vec![0u64; n + 1];
    for part in parts {
        for (acc, x) in total.iter_mut().zip(part) {
            *acc += x;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclic_polytope::cyclic::{chain_class_descent_polynomial, sign_class_descent_polynomial};

    #[test]
    fn parallel_tallies_match_sequential() {
        let engine = Engine::new(3, 1 << 16);
        for (k, n) in [(1, 1), (2, 4), (3, 5), (2, 6)] {
            let cs = ChainSet::hat(k, n).unwrap();
            assert_eq!(
                engine.chain_class_polynomial(&cs).unwrap(),
                chain_class_descent_polynomial(&cs)
            );
        }
        for s in SignWord::all(3) {
            assert_eq!(
                engine.sign_class_polynomial(&s).unwrap(),
                sign_class_descent_polynomial(&s)
            );
        }
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let sys = ConstraintSystem::hat(2, 6).unwrap();
        let one =
            Engine::new(1, 1 << 16).install(|| Engine::new(1, 1 << 16).ehrhart(&sys).unwrap());
        let four = Engine::new(4, 1 << 16);
        assert_eq!(four.install(|| four.ehrhart(&sys).unwrap()), one);
    }

    #[test]
    fn words_are_lexicographic() {
        let cs = ChainSet::hat(2, 4).unwrap();
        let words = Engine::default()
            .words(4, |w| cs.contains_order(w))
            .unwrap();
        assert_eq!(words.len(), 5);
        assert!(words.windows(2).all(|p| p[0].letters() < p[1].letters()));
    }
}
