//! The work behind each subcommand, independent of argument parsing.

use crate::engine::Engine;
use crate::family::Family;
use crate::reference::{misprint_correction, reference_hstar};
use crate::report::*;
use cyclic_polytope::boustrophedon::{arc_length_class_sizes, count_boustrophedon, refined_array};
use cyclic_polytope::parking::enumerate_parking;
use cyclic_polytope::polytope::EhrhartData;
use cyclic_polytope::sequences::factorial;
use cyclic_polytope::Result;
use num_rational::BigRational;
use rayon::prelude::*;

/// Largest `n` for which commands fall back to walking all `n!` words.
pub const ENUMERATION_LIMIT: usize = 10;

pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn pipeline(name: &'static str, value: Result<String>) -> PipelineResult {
    match value {
        Ok(v) => PipelineResult {
            name,
            value: Some(v),
            note: None,
        },
        Err(e) => PipelineResult {
            name,
            value: None,
            note: Some(format!("failed: {e}")),
        },
    }
}

/// Counts circular extensions three ways: by walking words, by the volume
/// of the polytope, and by a recurrence when the family has one.
pub fn count(engine: &Engine, family: &Family) -> Result<CountReport> {
    let sys = family.system()?;
    let n = family.n();
    let mut pipelines = Vec::new();

    pipelines.push(if n > ENUMERATION_LIMIT {
        PipelineResult {
            name: "enumeration",
            value: None,
            note: Some(format!("skipped: n > {ENUMERATION_LIMIT}")),
        }
    } else {
        let poly = match family {
            Family::Sign(s) => engine.sign_class_polynomial(s),
            _ => engine.chain_class_polynomial(&family.chain_set()?.expect("chain family")),
        };
        pipeline("enumeration", poly.map(|p| p.eval_one().to_string()))
    });

    pipelines.push(pipeline(
        "volume",
        engine
            .ehrhart(&sys)
            .map(|d| d.normalized_volume.to_string()),
    ));

    match family {
        Family::Hat { k, n } if *k >= 2 => {
            pipelines.push(pipeline(
                "boustrophedon",
                count_boustrophedon(*k, *n).map(|c| c.to_string()),
            ));
        }
        Family::Hat { n, .. } => {
            pipelines.push(pipeline("factorial", Ok(factorial(*n).to_string())))
        }
        Family::Chain(cs) if cs.is_empty() => {
            pipelines.push(pipeline("factorial", Ok(factorial(cs.n()).to_string())))
        }
        _ => {}
    }

    let mut discrepancies = Vec::new();
    let known: Vec<&PipelineResult> = pipelines.iter().filter(|p| p.value.is_some()).collect();
    for (i, a) in known.iter().enumerate() {
        for b in &known[i + 1..] {
            if a.value != b.value {
                discrepancies.push(Discrepancy {
                    left: a.name.to_string(),
                    left_value: a.value.clone().unwrap_or_default(),
                    right: b.name.to_string(),
                    right_value: b.value.clone().unwrap_or_default(),
                });
            }
        }
    }
    let failed = pipelines
        .iter()
        .any(|p| p.note.as_deref().is_some_and(|n| n.starts_with("failed")));
    Ok(CountReport {
        family: family.kind(),
        n,
        params: family.params(),
        count: known.first().and_then(|p| p.value.clone()),
        agreement: discrepancies.is_empty() && !failed,
        pipelines,
        discrepancies,
    })
}

pub fn polytope_report(
    family: &Family,
    data: &EhrhartData,
    values: Option<Vec<String>>,
) -> PolytopeReport {
    PolytopeReport {
        family: family.kind(),
        n: family.n(),
        params: family.params(),
        ehrhart: data.ehrhart.coeffs().iter().map(rational_string).collect(),
        hstar: data.hstar.coeffs().iter().map(|c| c.to_string()).collect(),
        normalized_volume: data.normalized_volume.to_string(),
        palindromic: data.is_palindromic(),
        values,
    }
}

/// Ehrhart data, plus `E(P, 0..=bound)` if a bound is given.
pub fn polytope(engine: &Engine, family: &Family, bound: Option<u64>) -> Result<PolytopeReport> {
    let sys = family.system()?;
    let data = engine.ehrhart(&sys)?;
    let values = bound.map(|b| {
        engine
            .lattice_counts(&sys, b)
            .iter()
            .map(|v| v.to_string())
            .collect()
    });
    Ok(polytope_report(family, &data, values))
}

pub fn enumerate_orders(engine: &Engine, family: &Family) -> Result<EnumerationReport> {
    let words = match family {
        Family::Sign(s) => engine.words(family.n(), |w| s.contains_order(w))?,
        _ => {
            let cs = family.chain_set()?.expect("chain family");
            engine.words(cs.n(), |w| cs.contains_order(w))?
        }
    };
    Ok(EnumerationReport {
        kind: "orders",
        n: family.n(),
        count: words.len().to_string(),
        statistic: words.iter().map(|w| w.descents()).collect(),
        items: words.into_iter().map(|w| w.letters().to_vec()).collect(),
    })
}

pub fn enumerate_parking_functions(n: usize) -> EnumerationReport {
    let all = enumerate_parking(n);
    EnumerationReport {
        kind: "parking",
        n,
        count: all.len().to_string(),
        statistic: all.iter().map(|p| p.ascents()).collect(),
        items: all.into_iter().map(|p| p.entries().to_vec()).collect(),
    }
}

/// The refined array for `Â_{k,n}`, compared entrywise with a walk over all
/// words when `n` is small enough.
pub fn boustrophedon(k: usize, n: usize) -> Result<BoustrophedonReport> {
    let array = refined_array(k, n)?;
    let mut discrepancies = Vec::new();
    let checked = n <= ENUMERATION_LIMIT;
    if checked {
        let brute = arc_length_class_sizes(k, n)?;
        for ((idx, fast), (_, slow)) in array.entries().zip(brute.entries()) {
            if fast != slow {
                let label = cyclic_polytope::cyclic::join_letters(idx.parts(), ",");
                discrepancies.push(Discrepancy {
                    left: format!("recurrence({label})"),
                    left_value: fast.to_string(),
                    right: format!("enumeration({label})"),
                    right_value: slow.to_string(),
                });
            }
        }
    }
    Ok(BoustrophedonReport {
        k,
        n,
        total: array.total().to_string(),
        entries: array
            .entries()
            .map(|(idx, v)| ArrayEntry {
                index: idx.0,
                value: v.to_string(),
            })
            .collect(),
        checked,
        discrepancies,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRange {
    pub k_min: usize,
    pub k_max: usize,
    pub col_max: usize,
    pub n_max: usize,
}

impl Default for TableRange {
    fn default() -> Self {
        Self {
            k_min: 1,
            k_max: 7,
            col_max: 5,
            n_max: 10,
        }
    }
}

impl TableRange {
    /// `(k, n)` for every cell, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (self.k_min.max(1)..=self.k_max)
            .flat_map(|k| (0..=self.col_max).map(move |c| (k, k + c)))
            .filter(|&(_, n)| n <= self.n_max)
            .collect()
    }
}

/// h*-polynomials of `B̂_{k,n}` over a range, each compared with the
/// reference table where it has an entry.
pub fn table(engine: &Engine, range: TableRange) -> Result<TableReport> {
    let cells = range
        .cells()
        .into_par_iter()
        .map(|(k, n)| {
            let data = engine.ehrhart(&Family::hat(k, n)?.system()?)?;
            let reference = reference_hstar(k, n);
            let differs = reference.as_ref().filter(|r| **r != data.hstar);
            Ok(TableCell {
                k,
                n,
                hstar: data.hstar.coeffs().iter().map(|c| c.to_string()).collect(),
                polynomial: data.hstar.to_string(),
                palindromic: data.is_palindromic(),
                matches_reference: reference.as_ref().map(|r| *r == data.hstar),
                reference: differs.map(|r| r.to_string()),
                known_misprint: differs.is_some()
                    && misprint_correction(k, n).as_ref() == Some(&data.hstar),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_match = cells.iter().all(TableCell::consistent);
    Ok(TableReport { cells, all_match })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclic_polytope::cyclic::{ChainSet, SignWord};

    #[test]
    fn euler_seven_from_three_pipelines() {
        let report = count(&Engine::default(), &Family::hat(2, 7).unwrap()).unwrap();
        assert_eq!(report.count.as_deref(), Some("272"));
        assert_eq!(report.pipelines.len(), 3);
        assert!(report
            .pipelines
            .iter()
            .all(|p| p.value.as_deref() == Some("272")));
        assert!(report.agreement);
    }

    #[test]
    fn other_families() {
        let e = Engine::default();
        let empty = count(&e, &Family::Chain(ChainSet::empty(3).unwrap())).unwrap();
        assert_eq!(empty.count.as_deref(), Some("6"));
        assert!(empty.agreement);
        let sign = count(&e, &Family::Sign("+-".parse::<SignWord>().unwrap())).unwrap();
        assert!(sign.agreement);
        assert_eq!(sign.pipelines.len(), 2);
    }

    #[test]
    fn hstar_report() {
        let r = polytope(&Engine::default(), &Family::hat(3, 6).unwrap(), Some(2)).unwrap();
        assert_eq!(r.hstar, ["1", "6", "6", "1"]);
        assert!(r.palindromic);
        assert_eq!(r.normalized_volume, "14");
        assert_eq!(r.values.as_ref().unwrap()[0], "1");
        assert!(r.ehrhart.iter().all(|c| c.contains('/')));
    }

    #[test]
    fn small_table_matches_reference() {
        let r = table(
            &Engine::default(),
            TableRange {
                k_min: 1,
                k_max: 3,
                col_max: 3,
                n_max: 6,
            },
        )
        .unwrap();
        assert_eq!(r.cells.len(), 12);
        assert!(r.all_match);
    }

    #[test]
    fn boustrophedon_report_checks_entries() {
        let r = boustrophedon(3, 5).unwrap();
        assert!(r.checked && r.discrepancies.is_empty());
        assert_eq!(
            r.entries
                .iter()
                .map(|e| e.value.parse::<u64>().unwrap())
                .sum::<u64>()
                .to_string(),
            r.total
        );
    }
}
