use cyclic_polytope::cyclic::{
    chain_class_descent_polynomial, count_chain_class, count_sign_class, ChainSet, CyclicWord,
    Orders, SignWord,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

#[test]
fn orders_satisfy_cyclic_order_axioms() {
    for n in 1..=5 {
        for w in Orders::new(n).unwrap() {
            let t = |x, y, z| w.contains_triple(x, y, z).unwrap();
            for x in 0..=n {
                for y in (0..=n).filter(|&y| y != x) {
                    for z in (0..=n).filter(|&z| z != x && z != y) {
                        if t(x, y, z) {
                            assert!(t(y, z, x), "cyclicity {w}");
                            assert!(!t(z, y, x), "asymmetry {w}");
                        } else {
                            assert!(t(z, y, x), "totality {w}");
                        }
                        for u in (0..=n).filter(|&u| u != x && u != y && u != z) {
                            if t(x, y, z) && t(x, z, u) {
                                assert!(t(x, y, u), "transitivity {w}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_yields_n_factorial_distinct_words() {
    for n in 1..=7 {
        let mut words: Vec<CyclicWord> = Orders::new(n).unwrap().collect();
        assert_eq!(words.len() as u64, factorial(n as u32));
        assert!(words.iter().all(|w| w.letters()[0] == 0));
        words.dedup();
        assert_eq!(words.len() as u64, factorial(n as u32));
    }
}

#[test]
fn sign_classes_partition_orders() {
    for n in 0..=6 {
        let total: BigUint = SignWord::all(n).iter().map(count_sign_class).sum();
        assert_eq!(total, BigUint::from(factorial(n as u32 + 1)), "n={n}");
    }
}

#[test]
fn descent_polynomial_sums_to_count() {
    for n in 1..=5 {
        for cs in ChainSet::antichains(n).unwrap() {
            let p = chain_class_descent_polynomial(&cs);
            assert_eq!(p.eval_one().to_biguint().unwrap(), count_chain_class(&cs));
        }
    }
}

#[test]
fn all_plus_sign_word_is_the_k2_class() {
    for n in 1..=6 {
        let s = SignWord::all_plus(n);
        let cs = ChainSet::hat(2, n + 1).unwrap();
        for w in Orders::new(n + 1).unwrap() {
            assert_eq!(s.contains_order(&w), cs.contains_order(&w), "{w}");
        }
    }
}

fn arb_chain_set() -> impl Strategy<Value = ChainSet> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 1..=n), 0..5).prop_map(move |raw| {
            let pairs = raw
                .into_iter()
                .map(|(a, b)| if a < b { (a, b) } else { (b.min(a), a.max(b)) })
                .filter(|(a, b)| a < b)
                .collect();
            ChainSet::new(n, pairs).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn nested_pairs_are_redundant(cs in arb_chain_set()) {
        let norm = cs.normalized();
        prop_assert!(norm.is_antichain());
        prop_assert_eq!(count_chain_class(&cs), count_chain_class(&norm));
        for w in Orders::new(cs.n()).unwrap() {
            prop_assert_eq!(cs.contains_order(&w), norm.contains_order(&w));
        }
    }

    #[test]
    fn membership_agrees_with_chain_queries(cs in arb_chain_set()) {
        for w in Orders::new(cs.n()).unwrap() {
            let by_query = cs
                .pairs()
                .iter()
                .all(|&(i, j)| w.is_chain(&(i..=j).collect::<Vec<_>>()).unwrap());
            prop_assert_eq!(cs.contains_order(&w), by_query);
        }
    }
}
