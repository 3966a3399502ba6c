//! Report types and their table / JSON / CSV renderings.
//!
//! JSON output is canonical: object keys sorted, two-space indent, trailing
//! newline. All schemas carry `schema_version`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use zsl_core::group::{GroupModel, SubsetMask};
use zsl_core::harborth::{InvariantCertificate, RemarkReport};
use zsl_core::lemma::LemmaReport;
use zsl_core::product::ProductSetResult;

use crate::config::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub subset: Vec<String>,
    pub witness: Vec<String>,
}

/// Harborth certificate as written by `zsl harborth --json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HarborthReport {
    pub schema_version: u32,
    pub group: String,
    pub n: Option<u32>,
    pub method: String,
    pub value: usize,
    pub lower_witness: Vec<String>,
    pub checked_subsets: u64,
    pub elapsed_ms: u64,
    /// Set for `--method both`.
    pub brute_value: Option<usize>,
    pub formula_value: Option<usize>,
    pub formula_lower_witness: Option<Vec<String>>,
    pub agree: Option<bool>,
    pub sampled_witnesses: Vec<WitnessEntry>,
}

impl HarborthReport {
    pub fn from_certificate(
        group: &GroupModel,
        method: &str,
        cert: &InvariantCertificate,
        elapsed_ms: u64,
    ) -> Self {
        HarborthReport {
            schema_version: SCHEMA_VERSION,
            group: group.label().to_string(),
            n: group.dihedral_n(),
            method: method.to_string(),
            value: cert.value,
            lower_witness: group.subset_names(cert.lower_witness),
            checked_subsets: cert.checked_subsets(),
            elapsed_ms,
            brute_value: None,
            formula_value: None,
            formula_lower_witness: None,
            agree: None,
            sampled_witnesses: cert
                .per_set_witnesses_sampled
                .iter()
                .map(|s| WitnessEntry {
                    subset: group.subset_names(s.subset),
                    witness: s
                        .witness
                        .ordering
                        .iter()
                        .map(|&e| group.element_name(e))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn violation(&self) -> bool {
        self.agree == Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AchievedEntry {
    pub element: String,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductSetReport {
    pub schema_version: u32,
    pub group: String,
    pub input: Vec<String>,
    pub achieved: Vec<AchievedEntry>,
}

impl ProductSetReport {
    pub fn new(group: &GroupModel, input: SubsetMask, result: &ProductSetResult) -> Self {
        ProductSetReport {
            schema_version: SCHEMA_VERSION,
            group: group.label().to_string(),
            input: group.subset_names(input),
            achieved: result
                .witnesses
                .iter()
                .map(|(&g, w)| AchievedEntry {
                    element: group.element_name(g),
                    witness: w.iter().map(|&e| group.element_name(e)).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremRow {
    pub n: u32,
    pub brute: usize,
    pub formula: usize,
    pub agree: bool,
    pub certificate: HarborthReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub schema_version: u32,
    pub n_min: u32,
    pub n_max: u32,
    pub rows: Vec<TheoremRow>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RemarkOddReport {
    pub schema_version: u32,
    pub n: u32,
    pub subset_size: usize,
    pub length: usize,
    pub subsets_checked: u64,
    pub passed: bool,
    pub counterexample: Option<Vec<String>>,
}

impl RemarkOddReport {
    pub fn new(group: &GroupModel, r: &RemarkReport) -> Self {
        RemarkOddReport {
            schema_version: SCHEMA_VERSION,
            n: r.n,
            subset_size: r.subset_size,
            length: r.length,
            subsets_checked: r.subsets_checked,
            passed: r.passed,
            counterexample: r.counterexample.map(|m| group.subset_names(m)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "report", rename_all = "snake_case")]
pub enum Report {
    Harborth(HarborthReport),
    ProductSet(ProductSetReport),
    Lemma(LemmaReport),
    Theorem(TheoremReport),
    RemarkOdd(RemarkOddReport),
}

impl Report {
    /// True when the report records a mathematical violation (exit code 3).
    pub fn violation(&self) -> bool {
        match self {
            Report::Harborth(h) => h.violation(),
            Report::ProductSet(_) => false,
            Report::Lemma(l) => !l.passed,
            Report::Theorem(t) => !t.passed,
            Report::RemarkOdd(r) => !r.passed,
        }
    }

    /// The JSON value without the `report` tag, as written to `--json` files.
    pub fn payload(&self) -> serde_json::Value {
        let v = match self {
            Report::Harborth(r) => serde_json::to_value(r),
            Report::ProductSet(r) => serde_json::to_value(r),
            Report::Lemma(r) => serde_json::to_value(r),
            Report::Theorem(r) => serde_json::to_value(r),
            Report::RemarkOdd(r) => serde_json::to_value(r),
        };
        let mut v = v.expect("report types always serialize");
        // LemmaReport comes straight from zsl-core and has no version field
        if let Some(obj) = v.as_object_mut() {
            obj.entry("schema_version").or_insert(SCHEMA_VERSION.into());
        }
        v
    }
}

/// Sorted keys, two-space indent, trailing newline.
pub fn canonical_json(value: &serde_json::Value) -> String {
    // serde_json::Value objects are BTreeMaps, so keys come out sorted
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => canonical_json(&report.payload()),
        Format::Csv => render_csv(report),
        Format::Table => render_table(report),
    }
}

fn join(v: &[String]) -> String {
    v.join(" ")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

fn render_csv(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Harborth(h) => {
            out.push_str("group,n,method,value,checked_subsets\n");
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                h.group,
                opt(&h.n),
                h.method,
                h.value,
                h.checked_subsets
            );
        }
        Report::ProductSet(p) => {
            out.push_str("element,witness\n");
            for a in &p.achieved {
                let _ = writeln!(out, "{},{}", a.element, join(&a.witness));
            }
        }
        Report::Lemma(l) => {
            out.push_str("exponents,subgroup_order,coset_rep,common_difference,missing_member,distinguished_kind\n");
            for e in &l.equality_instances {
                let c = &e.classification;
                let kind = c
                    .distinguished_kind
                    .map(|k| {
                        serde_json::to_value(k)
                            .ok()
                            .and_then(|v| v.as_str().map(String::from))
                            .unwrap_or_default()
                    })
                    .unwrap_or_default();
                let exps: Vec<String> = e.exponents.iter().map(u32::to_string).collect();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    join(&exps),
                    c.subgroup_order,
                    c.coset_rep,
                    c.common_difference,
                    opt(&c.missing_member),
                    kind
                );
            }
        }
        Report::Theorem(t) => {
            out.push_str("n,brute,formula,agree\n");
            for r in &t.rows {
                let _ = writeln!(out, "{},{},{},{}", r.n, r.brute, r.formula, r.agree);
            }
        }
        Report::RemarkOdd(r) => {
            out.push_str("n,subsets_checked,passed,counterexample\n");
            let ce = r.counterexample.as_deref().map(join).unwrap_or_default();
            let _ = writeln!(out, "{},{},{},{}", r.n, r.subsets_checked, r.passed, ce);
        }
    }
    out
}

fn render_table(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Harborth(h) => {
            let _ = writeln!(out, "group            {}", h.group);
            let _ = writeln!(out, "method           {}", h.method);
            let _ = writeln!(out, "value            {}", h.value);
            let _ = writeln!(out, "lower witness    {{{}}}", h.lower_witness.join(", "));
            if h.method != "formula" {
                let _ = writeln!(out, "checked subsets  {}", h.checked_subsets);
            }
            if let (Some(b), Some(f), Some(agree)) = (h.brute_value, h.formula_value, h.agree) {
                let _ = writeln!(out, "brute force      {b}");
                let _ = writeln!(out, "closed form      {f}");
                let _ = writeln!(out, "methods agree    {}", if agree { "yes" } else { "NO" });
                if !agree {
                    if let Some(w) = &h.formula_lower_witness {
                        let _ = writeln!(out, "formula witness  {{{}}}", w.join(", "));
                    }
                }
            }
            for w in &h.sampled_witnesses {
                let _ = writeln!(
                    out,
                    "  {{{}}} -> {}",
                    w.subset.join(", "),
                    w.witness.join("·")
                );
            }
        }
        Report::ProductSet(p) => {
            let _ = writeln!(
                out,
                "{} input {{{}}}: {} products",
                p.group,
                p.input.join(", "),
                p.achieved.len()
            );
            for a in &p.achieved {
                let _ = writeln!(out, "{:>6}  = {}", a.element, a.witness.join("·"));
            }
        }
        Report::Lemma(l) => {
            let _ = writeln!(
                out,
                "{} n={}{}  {}",
                l.lemma.name(),
                l.n,
                l.s.map(|s| format!(" s={s}")).unwrap_or_default(),
                if l.passed { "PASS" } else { "FAIL" }
            );
            let _ = writeln!(out, "checked            {}", l.subsets_checked);
            let _ = writeln!(out, "bound              {}", l.bound);
            let _ = writeln!(out, "min observed       {}", opt(&l.min_observed));
            let _ = writeln!(out, "bound violations   {}", l.bound_violations.len());
            let _ = writeln!(
                out,
                "equality           {} (predicted {})",
                l.equality_count, l.predicted_equality_count
            );
            for e in &l.equality_instances {
                let c = &e.classification;
                let _ = writeln!(
                    out,
                    "  {:?}  coset {} + <{}>{}",
                    e.exponents,
                    c.coset_rep,
                    c.common_difference,
                    c.missing_member
                        .map(|m| format!(" minus {m}"))
                        .unwrap_or_default()
                );
            }
            if let Some(v) = l.bound_violations.first() {
                let _ = writeln!(
                    out,
                    "counterexample     {:?} (size {} < {})",
                    v.exponents, v.observed, v.bound
                );
            }
            if let Some(u) = l.unclassified.first() {
                let _ = writeln!(
                    out,
                    "unclassified       {} sets, first {:?}",
                    l.unclassified.len(),
                    u
                );
            }
            if !l.family_not_attaining.is_empty() {
                let _ = writeln!(out, "family misses      {:?}", l.family_not_attaining);
            }
            if !l.removal_positions_missing.is_empty() {
                let _ = writeln!(out, "positions missing  {:?}", l.removal_positions_missing);
            }
        }
        Report::Theorem(t) => {
            let _ = writeln!(
                out,
                "{:>4} {:>6} {:>8} {:>6}",
                "n", "brute", "formula", "agree"
            );
            for r in &t.rows {
                let _ = writeln!(
                    out,
                    "{:>4} {:>6} {:>8} {:>6}",
                    r.n, r.brute, r.formula, r.agree
                );
            }
            let _ = writeln!(out, "{}", if t.passed { "PASS" } else { "FAIL" });
        }
        Report::RemarkOdd(r) => {
            let _ = writeln!(
                out,
                "D{}: {} subsets of size {} checked for length-{} one-products: {}",
                2 * r.n,
                r.subsets_checked,
                r.subset_size,
                r.length,
                if r.passed { "PASS" } else { "FAIL" }
            );
            if let Some(c) = &r.counterexample {
                let _ = writeln!(out, "counterexample {{{}}}", c.join(", "));
            }
        }
    }
    out
}
