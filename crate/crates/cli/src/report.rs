//! Report types and their JSON, CSV and plain renderings.
//!
//! Every number that can grow without bound is written as a decimal string.

use crate::family::Params;
use clap::ValueEnum;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

pub trait Render {
    fn json(&self) -> String;
    fn csv(&self) -> String;
    fn plain(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Plain => self.plain(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

/// CSV text, one record per row; rows may differ in length.
fn csv_rows<R, F>(rows: R) -> String
where
    R: IntoIterator<Item = Vec<F>>,
    F: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 fields")
}

fn lines<I: IntoIterator<Item = String>>(rows: I) -> String {
    rows.into_iter().fold(String::new(), |mut out, row| {
        out.push_str(&row);
        out.push('\n');
        out
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineResult {
    pub name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub left: String,
    pub left_value: String,
    pub right: String,
    pub right_value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub family: &'static str,
    pub n: usize,
    pub params: Params,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    pub pipelines: Vec<PipelineResult>,
    pub agreement: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<Discrepancy>,
}

impl CountReport {
    pub fn passed(&self) -> bool {
        self.agreement
    }
}

impl Render for CountReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn csv(&self) -> String {
        let mut rows = vec![vec!["pipeline".to_string(), "value".to_string()]];
        for p in &self.pipelines {
            rows.push(vec![
                p.name.to_string(),
                p.value.clone().unwrap_or_default(),
            ]);
        }
        rows.push(vec!["agreement".to_string(), self.agreement.to_string()]);
        csv_rows(rows)
    }

    fn plain(&self) -> String {
        let mut rows: Vec<String> = self
            .pipelines
            .iter()
            .map(|p| match (&p.value, &p.note) {
                (Some(v), _) => format!("{}: {v}", p.name),
                (None, Some(note)) => format!("{}: ({note})", p.name),
                (None, None) => format!("{}: -", p.name),
            })
            .collect();
        rows.push(format!("agreement: {}", self.agreement));
        for d in &self.discrepancies {
            rows.push(format!(
                "mismatch: {} = {} but {} = {}",
                d.left, d.left_value, d.right, d.right_value
            ));
        }
        lines(rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolytopeReport {
    pub family: &'static str,
    pub n: usize,
    pub params: Params,
    pub ehrhart: Vec<String>,
    pub hstar: Vec<String>,
    pub normalized_volume: String,
    pub palindromic: bool,
    /// `E(P, t)` for `t = 0, 1, …` when a dilation bound was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<String>>,
}

/// [`PolytopeReport`] shown through its h*-polynomial.
pub struct HStarView<'a>(pub &'a PolytopeReport);

/// [`PolytopeReport`] shown through its Ehrhart polynomial.
pub struct EhrhartView<'a>(pub &'a PolytopeReport);

fn indexed_rows(header: [&str; 2], values: &[String]) -> Vec<Vec<String>> {
    std::iter::once(header.map(String::from).to_vec())
        .chain(
            values
                .iter()
                .enumerate()
                .map(|(d, c)| vec![d.to_string(), c.clone()]),
        )
        .collect()
}

impl Render for HStarView<'_> {
    fn json(&self) -> String {
        to_json(self.0)
    }

    fn csv(&self) -> String {
        csv_rows(indexed_rows(["degree", "coefficient"], &self.0.hstar))
    }

    fn plain(&self) -> String {
        let r = self.0;
        let poly = cyclic_polytope::IntPolynomial::new(
            r.hstar
                .iter()
                .map(|c| c.parse().expect("integer string"))
                .collect(),
        );
        format!(
            "h*: {poly}\nnormalized volume: {}\npalindromic: {}\n",
            r.normalized_volume, r.palindromic
        )
    }
}

impl Render for EhrhartView<'_> {
    fn json(&self) -> String {
        to_json(self.0)
    }

    fn csv(&self) -> String {
        let mut rows = indexed_rows(["degree", "coefficient"], &self.0.ehrhart);
        if let Some(values) = &self.0.values {
            rows.extend(indexed_rows(["t", "count"], values));
        }
        csv_rows(rows)
    }

    fn plain(&self) -> String {
        let terms: Vec<String> = self
            .0
            .ehrhart
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| c.as_str() != "0/1")
            .map(|(d, c)| (d, c.strip_suffix("/1").unwrap_or(c)))
            .map(|(d, c)| match d {
                0 => c.to_string(),
                1 => format!("({c})t"),
                _ => format!("({c})t^{d}"),
            })
            .collect();
        let mut out = format!(
            "E(t) = {}\n",
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            }
        );
        if let Some(values) = &self.0.values {
            for (t, v) in values.iter().enumerate() {
                let _ = writeln!(out, "E({t}) = {v}");
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    /// `orders` or `parking`.
    pub kind: &'static str,
    pub n: usize,
    pub count: String,
    pub items: Vec<Vec<usize>>,
    /// Descents of each word, or ascents of each parking function.
    pub statistic: Vec<usize>,
}

impl Render for EnumerationReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn csv(&self) -> String {
        csv_rows(
            self.items
                .iter()
                .map(|item| item.iter().map(usize::to_string).collect()),
        )
    }

    fn plain(&self) -> String {
        let sep = if self.kind == "parking" { "," } else { " " };
        lines(
            self.items
                .iter()
                .map(|item| cyclic_polytope::cyclic::join_letters(item, sep)),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrayEntry {
    pub index: Vec<usize>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoustrophedonReport {
    pub k: usize,
    pub n: usize,
    pub total: String,
    pub entries: Vec<ArrayEntry>,
    /// Whether the entries were compared with arc-length class sizes.
    pub checked: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<Discrepancy>,
}

impl Render for BoustrophedonReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn csv(&self) -> String {
        csv_rows(self.entries.iter().map(|e| {
            let mut row: Vec<String> = e.index.iter().map(usize::to_string).collect();
            row.push(e.value.clone());
            row
        }))
    }

    fn plain(&self) -> String {
        let mut rows: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                format!(
                    "({}) {}",
                    cyclic_polytope::cyclic::join_letters(&e.index, ","),
                    e.value
                )
            })
            .collect();
        rows.push(format!("total: {}", self.total));
        lines(rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub k: usize,
    pub n: usize,
    pub hstar: Vec<String>,
    pub polynomial: String,
    pub palindromic: bool,
    /// Agreement with the reference table, when it has this cell.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_reference: Option<bool>,
    /// The reference polynomial when it differs from the computed one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    /// The cell is a listed misprint and the computed value equals its correction.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub known_misprint: bool,
}

impl TableCell {
    pub fn consistent(&self) -> bool {
        self.palindromic && (self.matches_reference != Some(false) || self.known_misprint)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub cells: Vec<TableCell>,
    pub all_match: bool,
}

impl Render for TableReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn csv(&self) -> String {
        let header = [
            "k",
            "n_minus_k",
            "hstar",
            "palindromic",
            "matches_reference",
            "reference",
            "known_misprint",
        ];
        let rows = self.cells.iter().map(|c| {
            vec![
                c.k.to_string(),
                (c.n - c.k).to_string(),
                c.polynomial.clone(),
                c.palindromic.to_string(),
                c.matches_reference.map_or(String::new(), |m| m.to_string()),
                c.reference.clone().unwrap_or_default(),
                c.known_misprint.to_string(),
            ]
        });
        csv_rows(std::iter::once(header.map(String::from).to_vec()).chain(rows))
    }

    fn plain(&self) -> String {
        let mut rows: Vec<String> = self
            .cells
            .iter()
            .map(|c| {
                let flag = match (c.matches_reference, &c.reference) {
                    (Some(true), _) => String::new(),
                    (Some(false), Some(p)) if c.known_misprint => {
                        format!("  (reference {p}, a known misprint)")
                    }
                    (Some(false), Some(p)) => format!("  MISMATCH (reference {p})"),
                    _ => "  (not in reference)".to_string(),
                };
                format!("k={} n-k={}: {}{flag}", c.k, c.n - c.k, c.polynomial)
            })
            .collect();
        rows.push(format!("all match: {}", self.all_match));
        lines(rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub scale: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl Render for VerifyReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn csv(&self) -> String {
        let rows = self
            .checks
            .iter()
            .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()]);
        csv_rows(
            std::iter::once(vec!["check".to_string(), "passed".into(), "detail".into()])
                .chain(rows),
        )
    }

    fn plain(&self) -> String {
        let mut rows: Vec<String> = self
            .checks
            .iter()
            .map(|c| {
                format!(
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )
            })
            .collect();
        rows.push(format!(
            "{} of {} checks passed",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        ));
        lines(rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorReport {
    pub error: String,
}

impl Render for ErrorReport {
    fn json(&self) -> String {
        to_json(self)
    }

    fn csv(&self) -> String {
        csv_rows([vec!["error"], vec![self.error.as_str()]])
    }

    fn plain(&self) -> String {
        format!("error: {}\n", self.error)
    }
}
