//! The `report-v1` machine-readable report plus the text and csv renderers.
//! All three formats emit identical numeric content; JSON output is
//! byte-stable across runs for identical inputs and flags.

use bcforge_core::complex::{CohomologyTable, Theory};
use bcforge_core::models::{BuiltModel, ModelSpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize)]
pub struct BigradedEntry {
    pub p: i64,
    pub q: i64,
    pub dim: usize,
}

#[derive(Serialize, Deserialize)]
pub struct TotalEntry {
    pub k: i64,
    pub dim: usize,
}

#[derive(Serialize, Deserialize)]
pub struct DdbarEntry {
    pub k: i64,
    pub value: u64,
}

#[derive(Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub model: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub tables: BTreeMap<String, Vec<BigradedEntry>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub de_rham: Vec<TotalEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub ddbar_degrees: Vec<DdbarEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ddbar_satisfied: Option<bool>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub representatives: BTreeMap<String, Vec<String>>,
}

/// Bidegrees sorted by antidiagonal, `p` descending inside each one; the
/// layout used by the text tables.
fn sorted_bidegrees(entries: &[BigradedEntry]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..entries.len()).collect();
    idx.sort_by_key(|&i| (entries[i].p + entries[i].q, -entries[i].p));
    idx
}

impl Report {
    pub fn from_table(
        built: &BuiltModel,
        spec: &ModelSpec,
        table: &CohomologyTable,
        theories: &[Theory],
        reps: bool,
    ) -> Report {
        let mut tables = BTreeMap::new();
        for (theory, per) in &table.bigraded {
            let entries: Vec<BigradedEntry> = per
                .iter()
                .map(|(&(p, q), &dim)| BigradedEntry { p, q, dim })
                .collect();
            tables.insert(theory.token().to_string(), entries);
        }
        let de_rham: Vec<TotalEntry> = table
            .de_rham
            .iter()
            .map(|(&k, &dim)| TotalEntry { k, dim })
            .collect();
        let mut representatives = BTreeMap::new();
        if reps {
            let c = built.complex();
            for &t in theories {
                if t == Theory::DeRham || t == Theory::PureType || t == Theory::E1 {
                    continue;
                }
                for (p, q) in c.support() {
                    let res = match t {
                        Theory::Del => c.h_del(p, q),
                        Theory::Delbar => c.h_delbar(p, q),
                        Theory::BottChern => c.h_bott_chern(p, q),
                        Theory::Aeppli => c.h_aeppli(p, q),
                        _ => unreachable!(),
                    };
                    let labels = c.labels_at(p, q);
                    let rendered: Vec<String> = res
                        .representatives
                        .basis_vectors()
                        .iter()
                        .map(|v| {
                            let mut terms = Vec::new();
                            for (i, x) in v.iter().enumerate() {
                                if !x.is_zero() {
                                    terms.push(format!("({x})·{}", labels[i]));
                                }
                            }
                            terms.join(" + ")
                        })
                        .collect();
                    if !rendered.is_empty() {
                        representatives
                            .insert(format!("{} ({p},{q})", t.token()), rendered);
                    }
                }
            }
        }
        Report {
            schema: "report-v1".into(),
            model: spec.name.clone(),
            tables,
            de_rham,
            ddbar_degrees: Vec::new(),
            ddbar_satisfied: None,
            representatives,
        }
    }

    pub fn from_ddbar(spec: &ModelSpec, degrees: &BTreeMap<i64, u64>) -> Report {
        let entries: Vec<DdbarEntry> = degrees
            .iter()
            .map(|(&k, &value)| DdbarEntry { k, value })
            .collect();
        let satisfied = entries.iter().all(|e| e.value == 0);
        Report {
            schema: "report-v1".into(),
            model: spec.name.clone(),
            tables: BTreeMap::new(),
            de_rham: Vec::new(),
            ddbar_degrees: entries,
            ddbar_satisfied: Some(satisfied),
            representatives: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

pub fn render_table_text(rep: &Report) -> String {
    let mut out = format!("model: {}\n", rep.model);
    if !rep.de_rham.is_empty() {
        out.push_str("theory: dr\n  k    dim\n");
        for e in &rep.de_rham {
            out.push_str(&format!("  {:<4} {}\n", e.k, e.dim));
        }
    }
    for (theory, entries) in &rep.tables {
        out.push_str(&format!("theory: {theory}\n  (p,q)  dim\n"));
        let mut last_diag = i64::MIN;
        for &i in &sorted_bidegrees(entries) {
            let e = &entries[i];
            if e.p + e.q != last_diag && last_diag != i64::MIN {
                out.push_str("  ----\n");
            }
            last_diag = e.p + e.q;
            out.push_str(&format!("  ({},{})  {}\n", e.p, e.q, e.dim));
        }
    }
    for (key, reps) in &rep.representatives {
        out.push_str(&format!("representatives {key}:\n"));
        for r in reps {
            out.push_str(&format!("  {r}\n"));
        }
    }
    out
}

pub fn render_table_csv(rep: &Report) -> String {
    let mut out = String::from("theory,p,q,dim\n");
    for e in &rep.de_rham {
        out.push_str(&format!("dr,{},,{}\n", e.k, e.dim));
    }
    for (theory, entries) in &rep.tables {
        for &i in &sorted_bidegrees(entries) {
            let e = &entries[i];
            out.push_str(&format!("{theory},{},{},{}\n", e.p, e.q, e.dim));
        }
    }
    out
}

pub fn render_ddbar_text(rep: &Report) -> String {
    let mut out = format!("model: {}\n", rep.model);
    for e in &rep.ddbar_degrees {
        out.push_str(&format!("  k={}  degree {}\n", e.k, e.value));
    }
    let verdict = if rep.ddbar_satisfied == Some(true) {
        "SATISFIED"
    } else {
        "VIOLATED"
    };
    out.push_str(&format!("∂∂̄-lemma: {verdict}\n"));
    out
}

pub fn render_ddbar_csv(rep: &Report) -> String {
    let mut out = String::from("k,degree\n");
    for e in &rep.ddbar_degrees {
        out.push_str(&format!("{},{}\n", e.k, e.value));
    }
    out
}

#[derive(Serialize, Deserialize)]
pub struct CompareRow {
    pub theory: String,
    pub p: i64,
    /// `-1` marks a total-degree row (theory dr), where `p` holds `k`.
    pub q: i64,
    pub injective: bool,
    pub surjective: bool,
}

#[derive(Serialize, Deserialize)]
pub struct CompareReport {
    pub schema: String,
    pub sub: String,
    pub ambient: String,
    pub rows: Vec<CompareRow>,
}

pub fn render_compare_text(rep: &CompareReport) -> String {
    let mut out = format!("sub: {}\nambient: {}\n", rep.sub, rep.ambient);
    for r in &rep.rows {
        let kind = if r.injective && r.surjective {
            "bijective"
        } else if r.injective {
            "injective"
        } else if r.surjective {
            "surjective"
        } else {
            "neither"
        };
        if r.q < 0 {
            out.push_str(&format!("  {} k={}: {kind}\n", r.theory, r.p));
        } else {
            out.push_str(&format!("  {} ({},{}): {kind}\n", r.theory, r.p, r.q));
        }
    }
    out
}

pub fn render_compare_csv(rep: &CompareReport) -> String {
    let mut out = String::from("theory,p,q,injective,surjective\n");
    for r in &rep.rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.theory,
            r.p,
            if r.q < 0 { String::new() } else { r.q.to_string() },
            r.injective,
            r.surjective
        ));
    }
    out
}

pub use bcforge_core::models::reference::generator_table_diff;
