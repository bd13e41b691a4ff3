//! The invariant suite behind `cpoly verify`.

use crate::commands::{table, TableRange};
use crate::engine::Engine;
use crate::report::{CheckResult, VerifyReport};
use clap::ValueEnum;
use cyclic_polytope::boustrophedon::{
    arc_length_class_sizes, count_boustrophedon, refined_array, tau, SimplexIndex,
};
use cyclic_polytope::cyclic::{
    count_chain_class, count_sign_class, ChainSet, CyclicWord, Orders, SignWord,
};
use cyclic_polytope::parking::{
    ascents_tally, enumerate_parking, order_of_parking, parking_of_order, ParkingFunction,
};
use cyclic_polytope::polytope::ConstraintSystem;
use cyclic_polytope::sequences::{
    catalan, euler_updown, eulerian_polynomial, factorial, narayana, narayana_polynomial,
};
use cyclic_polytope::transfer::{forward, inverse, verify_correspondence, RationalPoint};
use cyclic_polytope::IntPolynomial;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Small,
    Full,
}

/// Exhaustive bounds for one scale.
#[derive(Debug, Clone, Copy)]
struct Bounds {
    axioms: usize,
    orders: usize,
    signs: usize,
    antichains: usize,
    sign_volume: usize,
    table: usize,
    euler: usize,
    eulerian: usize,
    boustrophedon: usize,
    refined: usize,
    samples: usize,
    sample_dim: usize,
    grid: usize,
    parking: usize,
    catalan: usize,
}

impl Scale {
    fn bounds(self) -> Bounds {
        match self {
            Scale::Small => Bounds {
                axioms: 5,
                orders: 7,
                signs: 5,
                antichains: 5,
                sign_volume: 4,
                table: 7,
                euler: 7,
                eulerian: 6,
                boustrophedon: 6,
                refined: 6,
                samples: 100,
                sample_dim: 6,
                grid: 3,
                parking: 4,
                catalan: 6,
            },
            Scale::Full => Bounds {
                axioms: 5,
                orders: 8,
                signs: 6,
                antichains: 5,
                sign_volume: 4,
                table: 10,
                euler: 9,
                eulerian: 7,
                boustrophedon: 8,
                refined: 7,
                samples: 1000,
                sample_dim: 10,
                grid: 4,
                parking: 4,
                catalan: 8,
            },
        }
    }
}

type Check = Result<String, String>;
type NamedCheck<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(ok: bool, fail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(fail())
    }
}

fn hstar_of(engine: &Engine, sys: &ConstraintSystem) -> Result<IntPolynomial, String> {
    engine
        .ehrhart(sys)
        .map(|d| d.hstar)
        .map_err(|e| e.to_string())
}

fn hat_hstar(engine: &Engine, k: usize, n: usize) -> Result<IntPolynomial, String> {
    hstar_of(
        engine,
        &ConstraintSystem::hat(k, n).map_err(|e| e.to_string())?,
    )
}

fn err(e: cyclic_polytope::Error) -> String {
    e.to_string()
}

fn cyclic_axioms(b: Bounds) -> Check {
    let mut words = 0;
    for n in 1..=b.axioms {
        for w in Orders::new(n).map_err(err)? {
            words += 1;
            let t = |x, y, z| w.contains_triple(x, y, z).expect("letters in range");
            for x in 0..=n {
                for y in (0..=n).filter(|&y| y != x) {
                    for z in (0..=n).filter(|&z| z != x && z != y) {
                        ensure(t(x, y, z) == t(y, z, x), || {
                            format!("{w}: cyclicity fails at ({x},{y},{z})")
                        })?;
                        ensure(t(x, y, z) != t(z, y, x), || {
                            format!("{w}: asymmetry or totality fails at ({x},{y},{z})")
                        })?;
                        for u in (0..=n).filter(|&u| u != x && u != y && u != z) {
                            if t(x, y, z) && t(x, z, u) {
                                ensure(t(x, y, u), || {
                                    format!("{w}: transitivity fails at ({x},{y},{z},{u})")
                                })?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{words} orders with n <= {}", b.axioms))
}

fn order_counts(b: Bounds) -> Check {
    for n in 1..=b.orders {
        let count = Orders::new(n).map_err(err)?.count();
        ensure(BigUint::from(count) == factorial(n), || {
            format!("n={n}: {count} orders")
        })?;
    }
    Ok(format!("n! orders for n <= {}", b.orders))
}

fn sign_partition(b: Bounds) -> Check {
    for n in 1..=b.signs {
        let total: BigUint = SignWord::all(n).iter().map(count_sign_class).sum();
        ensure(total == factorial(n + 1), || {
            format!("length {n}: classes sum to {total}")
        })?;
    }
    Ok(format!(
        "sign classes partition the orders for length <= {}",
        b.signs
    ))
}

fn descent_identity(engine: &Engine, b: Bounds) -> Check {
    let mut checked = 0;
    for n in 1..=b.antichains {
        for cs in ChainSet::antichains(n).map_err(err)? {
            let lhs = hstar_of(engine, &ConstraintSystem::from_chain_set(&cs))?;
            let rhs = engine.chain_class_polynomial(&cs).map_err(err)?;
            ensure(lhs == rhs, || {
                format!("I={cs}, n={n}: h* = {lhs} but descents give {rhs}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} antichains with n <= {}", b.antichains))
}

fn sign_volumes(engine: &Engine, b: Bounds) -> Check {
    let mut checked = 0;
    for n in 1..=b.sign_volume {
        for s in SignWord::all(n) {
            let h = hstar_of(engine, &ConstraintSystem::from_sign_word(&s))?;
            let count = count_sign_class(&s);
            ensure(h.eval_one() == BigInt::from(count.clone()), || {
                format!("s={s}: h*(1) = {} but count = {count}", h.eval_one())
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} sign words of length <= {}",
        b.sign_volume
    ))
}

fn euler_column(engine: &Engine, b: Bounds) -> Check {
    let one = engine
        .ehrhart(&ConstraintSystem::from_chain_set(
            &ChainSet::empty(1).map_err(err)?,
        ))
        .map_err(err)?;
    ensure(one.normalized_volume == euler_updown(1), || {
        "n=1".to_string()
    })?;
    for n in 2..=b.euler {
        let sys = ConstraintSystem::hat(2, n).map_err(err)?;
        let vol = engine.ehrhart(&sys).map_err(err)?.normalized_volume;
        ensure(vol == euler_updown(n), || {
            format!("n={n}: volume {vol}, E_n = {}", euler_updown(n))
        })?;
    }
    Ok(format!("E_n for n <= {}", b.euler))
}

fn eulerian_row(engine: &Engine, b: Bounds) -> Check {
    for n in 1..=b.eulerian {
        let h = hat_hstar(engine, 1, n)?;
        let e = eulerian_polynomial(n).map_err(err)?;
        ensure(h == e, || format!("n={n}: {h} vs {e}"))?;
    }
    Ok(format!("n <= {}", b.eulerian))
}

fn hstar_table(engine: &Engine, b: Bounds) -> Check {
    let report = table(
        engine,
        TableRange {
            n_max: b.table,
            ..TableRange::default()
        },
    )
    .map_err(err)?;
    let bad: Vec<String> = report
        .cells
        .iter()
        .filter(|c| !c.consistent() || c.matches_reference.is_none())
        .map(|c| format!("k={} n={}: {}", c.k, c.n, c.polynomial))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    let mut misprints = Vec::new();
    for c in report.cells.iter().filter(|c| c.known_misprint) {
        let enumerated = engine
            .chain_class_polynomial(&ChainSet::hat(c.k, c.n).map_err(err)?)
            .map_err(err)?;
        ensure(enumerated.to_string() == c.polynomial, || {
            format!("k={} n={}: enumeration gives {enumerated}", c.k, c.n)
        })?;
        misprints.push(format!("k={} n-k={}", c.k, c.n - c.k));
    }
    let mut detail = format!(
        "{} cells with n <= {}, all palindromic",
        report.cells.len(),
        b.table
    );
    if !misprints.is_empty() {
        detail.push_str(&format!(
            "; reference misprint confirmed by enumeration at {}",
            misprints.join(", ")
        ));
    }
    Ok(detail)
}

fn narayana_cells(engine: &Engine, b: Bounds) -> Check {
    let cells: Vec<(usize, usize)> = (1..=b.table)
        .flat_map(|k| (k..=(2 * k).min(b.table)).map(move |n| (k, n)))
        .collect();
    cells
        .par_iter()
        .map(|&(k, n)| {
            let h = hat_hstar(engine, k, n)?;
            let q = narayana_polynomial(n - k + 1).map_err(err)?;
            ensure(h == q, || format!("k={k}, n={n}: {h} vs {q}"))
        })
        .collect::<Result<Vec<()>, String>>()?;
    Ok(format!(
        "{} cells with k <= n <= 2k, n <= {}",
        cells.len(),
        b.table
    ))
}

fn stabilization(engine: &Engine, b: Bounds) -> Check {
    let pairs: Vec<(usize, usize)> = (1..b.table)
        .flat_map(|n| (1..=n).filter(move |&k| 2 * k >= n).map(move |k| (k, n)))
        .collect();
    pairs
        .par_iter()
        .map(|&(k, n)| {
            let a = hat_hstar(engine, k, n)?;
            let c = hat_hstar(engine, k + 1, n + 1)?;
            ensure(a == c, || format!("k={k}, n={n}: {a} vs {c}"))
        })
        .collect::<Result<Vec<()>, String>>()?;
    Ok(format!("{} pairs with n + 1 <= {}", pairs.len(), b.table))
}

/// The first antichain (by size of `n`, then listing order) whose polytope
/// has a non-palindromic h*-polynomial.
pub fn non_palindromic_witness(engine: &Engine, max_n: usize) -> Option<(ChainSet, IntPolynomial)> {
    (1..=max_n).find_map(|n| {
        ChainSet::antichains(n).ok()?.into_iter().find_map(|cs| {
            let h = engine
                .ehrhart(&ConstraintSystem::from_chain_set(&cs))
                .ok()?
                .hstar;
            (!h.is_palindromic()).then_some((cs, h))
        })
    })
}

fn witness(engine: &Engine, b: Bounds) -> Check {
    match non_palindromic_witness(engine, b.antichains) {
        Some((cs, h)) => Ok(format!("I={cs}, n={}: h* = {h}", cs.n())),
        None => Err(format!(
            "every antichain with n <= {} gives a palindromic h*",
            b.antichains
        )),
    }
}

fn boustrophedon_counts(b: Bounds) -> Check {
    for n in 2..=b.boustrophedon {
        for k in 2..=n {
            let fast = count_boustrophedon(k, n).map_err(err)?;
            let slow = count_chain_class(&ChainSet::hat(k, n).map_err(err)?);
            ensure(fast == slow, || format!("k={k}, n={n}: {fast} vs {slow}"))?;
        }
    }
    Ok(format!("2 <= k <= n <= {}", b.boustrophedon))
}

fn refined_arrays(b: Bounds) -> Check {
    for n in 2..=b.refined {
        for k in 2..=n {
            let fast = refined_array(k, n).map_err(err)?;
            let slow = arc_length_class_sizes(k, n).map_err(err)?;
            ensure(fast == slow, || format!("k={k}, n={n}"))?;
        }
    }
    Ok(format!("2 <= k <= n <= {}", b.refined))
}

fn tau_examples(_: Bounds) -> Check {
    ensure(tau(&SimplexIndex(vec![1, 2, 4])).is_empty(), || {
        "tau(1,2,4) is not empty".to_string()
    })?;
    let got = tau(&SimplexIndex(vec![4, 2, 1]));
    let want = [vec![1, 2, 3], vec![2, 2, 2], vec![3, 2, 1]];
    ensure(
        got.iter().map(|i| i.0.clone()).eq(want.iter().cloned()),
        || format!("tau(4,2,1) = {got:?}"),
    )?;
    Ok("tau(1,2,4) and tau(4,2,1)".to_string())
}

fn random_point(rng: &mut impl Rng, n: usize) -> RationalPoint {
    let coords = (0..n)
        .map(|_| {
            let q: i64 = rng.gen_range(1..=60);
            BigRational::new(rng.gen_range(0..q).into(), q.into())
        })
        .collect();
    RationalPoint::new(coords).expect("coordinates in [0,1)")
}

fn transfer_roundtrip(b: Bounds) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=b.sample_dim {
        for _ in 0..b.samples {
            let x = random_point(&mut rng, n);
            ensure(
                inverse(&forward(&x)) == x && forward(&inverse(&x)) == x,
                || format!("x = {:?}", x.coords()),
            )?;
        }
    }
    Ok(format!("{} points per n <= {}", b.samples, b.sample_dim))
}

fn transfer_integrality(b: Bounds) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a7);
    for _ in 0..b.samples {
        let n = rng.gen_range(1..=b.sample_dim);
        let t: u64 = rng.gen_range(1..=40);
        let coords = (0..n)
            .map(|_| BigRational::new(rng.gen_range(0..t).into(), t.into()))
            .collect();
        let x = RationalPoint::new(coords).expect("coordinates in [0,1)");
        ensure(
            forward(&x).is_integral_after_scaling(t) && inverse(&x).is_integral_after_scaling(t),
            || format!("t={t}, x = {:?}", x.coords()),
        )?;
    }
    Ok(format!("{} pairs (v, t)", b.samples))
}

/// Points of `{1/d, …, (d-1)/d}^n` with no integral consecutive sum.
pub fn generic_grid(n: usize, d: i64) -> Vec<RationalPoint> {
    let mut out = Vec::new();
    let mut a = vec![1i64; n];
    loop {
        let x = RationalPoint::new(
            a.iter()
                .map(|&p| BigRational::new(p.into(), d.into()))
                .collect(),
        )
        .expect("grid point");
        if x.is_generic() {
            out.push(x);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            a[i] += 1;
            if a[i] < d {
                break;
            }
            a[i] = 1;
            i += 1;
        }
    }
}

fn transfer_correspondence(b: Bounds) -> Check {
    let mut checked = 0usize;
    for n in 1..=b.grid {
        let grid = generic_grid(n, 7);
        for cs in ChainSet::antichains(n).map_err(err)? {
            for x in &grid {
                ensure(verify_correspondence(&cs, x).map_err(err)?, || {
                    format!("I={cs}, x = {:?}", x.coords())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (antichain, grid point) pairs with n <= {}",
        b.grid
    ))
}

fn parking_bijection(b: Bounds) -> Check {
    for n in 0..=b.parking {
        let hat = if n == 0 {
            None
        } else {
            Some(ChainSet::hat(n, 2 * n).map_err(err)?)
        };
        let words: Vec<CyclicWord> = match &hat {
            None => vec![CyclicWord::identity(0)],
            Some(cs) => Orders::new(2 * n)
                .map_err(err)?
                .filter(|w| cs.contains_order(w))
                .collect(),
        };
        let parking = enumerate_parking(n);
        ensure(words.len() == parking.len(), || {
            format!(
                "n={n}: {} orders, {} parking functions",
                words.len(),
                parking.len()
            )
        })?;
        for w in &words {
            let p = parking_of_order(w).map_err(err)?;
            ensure(order_of_parking(&p) == *w, || {
                format!("n={n}: {w} does not round-trip")
            })?;
            ensure(w.descents() == p.ascents(), || {
                format!(
                    "n={n}: {w} has {} descents, {p} has {} ascents",
                    w.descents(),
                    p.ascents()
                )
            })?;
        }
        for p in &parking {
            ensure(
                parking_of_order(&order_of_parking(p)).map_err(err)? == *p,
                || format!("{p} does not round-trip"),
            )?;
        }
    }
    Ok(format!("n <= {}", b.parking))
}

fn parking_counts(b: Bounds) -> Check {
    for n in 0..=b.catalan {
        let tally = ascents_tally(n);
        let total: u64 = tally.iter().sum();
        ensure(BigUint::from(total) == catalan(n + 1), || {
            format!("n={n}: {total} parking functions")
        })?;
        for (k, &c) in tally.iter().enumerate() {
            let expected = narayana(n + 1, k + 1).map_err(err)?;
            ensure(BigUint::from(c) == expected, || {
                format!("n={n}, {k} ascents: {c} vs N = {expected}")
            })?;
        }
    }
    Ok(format!("n <= {}", b.catalan))
}

fn parking_example(_: Bounds) -> Check {
    let w = CyclicWord::new(vec![0, 4, 5, 1, 2, 6, 3]).map_err(err)?;
    let p = ParkingFunction::new(vec![0, 1, 1, 3]).map_err(err)?;
    ensure(parking_of_order(&w).map_err(err)? == p, || {
        "forward image differs".to_string()
    })?;
    ensure(order_of_parking(&p) == w, || {
        "inverse image differs".to_string()
    })?;
    Ok(format!("{w} <-> {p}"))
}

/// Runs every check at the given scale.
pub fn verify(engine: &Engine, scale: Scale) -> VerifyReport {
    let b = scale.bounds();
    let checks: Vec<NamedCheck<'_>> = vec![
        ("cyclic-axioms", Box::new(move || cyclic_axioms(b))),
        ("order-counts", Box::new(move || order_counts(b))),
        ("sign-partition", Box::new(move || sign_partition(b))),
        (
            "descent-identity",
            Box::new(move || descent_identity(engine, b)),
        ),
        ("sign-volumes", Box::new(move || sign_volumes(engine, b))),
        ("euler-column", Box::new(move || euler_column(engine, b))),
        ("eulerian-row", Box::new(move || eulerian_row(engine, b))),
        ("hstar-table", Box::new(move || hstar_table(engine, b))),
        ("narayana", Box::new(move || narayana_cells(engine, b))),
        ("stabilization", Box::new(move || stabilization(engine, b))),
        (
            "non-palindromic-witness",
            Box::new(move || witness(engine, b)),
        ),
        (
            "boustrophedon-counts",
            Box::new(move || boustrophedon_counts(b)),
        ),
        ("refined-arrays", Box::new(move || refined_arrays(b))),
        ("tau-examples", Box::new(move || tau_examples(b))),
        (
            "transfer-roundtrip",
            Box::new(move || transfer_roundtrip(b)),
        ),
        (
            "transfer-integrality",
            Box::new(move || transfer_integrality(b)),
        ),
        (
            "transfer-correspondence",
            Box::new(move || transfer_correspondence(b)),
        ),
        ("parking-bijection", Box::new(move || parking_bijection(b))),
        ("parking-counts", Box::new(move || parking_counts(b))),
        ("parking-example", Box::new(move || parking_example(b))),
    ];
    let checks: Vec<CheckResult> = checks
        .into_iter()
        .map(|(name, check)| {
            let (passed, detail) = match check() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult {
                name: name.to_string(),
                passed,
                detail,
            }
        })
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    VerifyReport {
        scale: match scale {
            Scale::Small => "small",
            Scale::Full => "full",
        }
        .to_string(),
        checks,
        passed,
    }
}
