// SPDX-License-Identifier: Apache-2.0

//! Deterministic JSON, CSV and text renderings, plus edge-list ingestion.
//!
//! Big integers are always written as decimal strings and ratios as
//! `{"num": "..", "den": ".."}` in lowest terms. Output uses LF line endings
//! and a fixed key order, so identical inputs give byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::dendrimer::DendrimerParams;
use crate::error::{Error, Result};
use crate::exact_arith::{ExactInt, ExactRatio};
use crate::indices::IndexReport;
use crate::oracle::{build_dendrimer_with, OracleLimits, TreeGraph};
use crate::paths::PathLengthTable;
use crate::verify::{CheckOutcome, VerificationSummary};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Index(IndexReport),
    Table(PathLengthTable),
    Verification(VerificationSummary),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub payload: Payload,
}

impl ReportDocument {
    pub fn new(payload: Payload) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            payload,
        }
    }
}

impl From<IndexReport> for ReportDocument {
    fn from(r: IndexReport) -> Self {
        Self::new(Payload::Index(r))
    }
}

impl From<PathLengthTable> for ReportDocument {
    fn from(t: PathLengthTable) -> Self {
        Self::new(Payload::Table(t))
    }
}

impl From<VerificationSummary> for ReportDocument {
    fn from(v: VerificationSummary) -> Self {
        Self::new(Payload::Verification(v))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RatioWire {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CountWire {
    length: u32,
    count: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SigmaWire {
    sigma: u32,
    value: RatioWire,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IndexWire {
    schema_version: u32,
    n: u32,
    k: u32,
    vertices: String,
    edges: String,
    leaves: String,
    counts: Vec<CountWire>,
    wiener: String,
    average_distance: RatioWire,
    medium_domination: Vec<SigmaWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableWire {
    schema_version: u32,
    n: u32,
    k: u32,
    counts: Vec<CountWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckWire {
    family: String,
    instances: u64,
    passed: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VerificationWire {
    schema_version: u32,
    passed: bool,
    checks: Vec<CheckWire>,
    counterexample: Option<String>,
}

fn ratio_wire(r: &ExactRatio) -> RatioWire {
    RatioWire {
        num: r.numer().to_string(),
        den: r.denom().to_string(),
    }
}

fn counts_wire(t: &PathLengthTable) -> Vec<CountWire> {
    t.iter()
        .map(|(length, c)| CountWire {
            length,
            count: c.to_string(),
        })
        .collect()
}

fn parse_int(field: &str, s: &str) -> Result<ExactInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Report(format!("{field}: expected a decimal string, got {s:?}")));
    }
    s.parse()
        .map_err(|e| Error::Report(format!("{field}: {e}")))
}

fn parse_ratio(field: &str, r: &RatioWire) -> Result<ExactRatio> {
    let num = parse_int(field, &r.num)?;
    let den = parse_int(field, &r.den)?;
    if den.is_zero() {
        return Err(Error::Report(format!("{field}: zero denominator")));
    }
    let reduced = ExactRatio::new(num.clone(), den.clone())?;
    if reduced.numer() != &num {
        return Err(Error::Report(format!("{field}: {num}/{den} is not in lowest terms")));
    }
    Ok(reduced)
}

fn parse_table(params: DendrimerParams, counts: &[CountWire]) -> Result<PathLengthTable> {
    let mut map = BTreeMap::new();
    let mut last = 0;
    for c in counts {
        if c.length <= last {
            return Err(Error::Report(format!(
                "counts: lengths must be ascending from 1, saw {} after {last}",
                c.length
            )));
        }
        last = c.length;
        map.insert(c.length, parse_int("counts", &c.count)?);
    }
    Ok(PathLengthTable::from_counts(params, map))
}

fn check_version(v: u32) -> Result<()> {
    if v != SCHEMA_VERSION {
        return Err(Error::Report(format!("unsupported schema_version {v}")));
    }
    Ok(())
}

fn pretty<T: Serialize>(wire: &T) -> String {
    let mut s = serde_json::to_string_pretty(wire).expect("wire types serialize");
    s.push('\n');
    s
}

pub fn to_json(doc: &ReportDocument) -> String {
    let v = doc.schema_version;
    match &doc.payload {
        Payload::Index(r) => pretty(&IndexWire {
            schema_version: v,
            n: r.params.n(),
            k: r.params.k(),
            vertices: r.vertices.to_string(),
            edges: r.edges.to_string(),
            leaves: r.leaves.to_string(),
            counts: counts_wire(&r.table),
            wiener: r.wiener.to_string(),
            average_distance: ratio_wire(&r.average_distance),
            medium_domination: r
                .medium_domination
                .iter()
                .map(|(sigma, g)| SigmaWire {
                    sigma: *sigma,
                    value: ratio_wire(g),
                })
                .collect(),
        }),
        Payload::Table(t) => pretty(&TableWire {
            schema_version: v,
            n: t.params().n(),
            k: t.params().k(),
            counts: counts_wire(t),
        }),
        Payload::Verification(s) => pretty(&VerificationWire {
            schema_version: v,
            passed: s.passed(),
            checks: s
                .checks
                .iter()
                .map(|c| CheckWire {
                    family: c.family.clone(),
                    instances: c.instances,
                    passed: c.passed,
                })
                .collect(),
            counterexample: s.counterexample.clone(),
        }),
    }
}

/// Parses any document produced by [`to_json`].
pub fn from_json(text: &str) -> Result<ReportDocument> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))?;
    let has = |key: &str| value.get(key).is_some();
    let decode_err = |e: serde_json::Error| Error::Report(e.to_string());
    if has("wiener") {
        let w: IndexWire = serde_json::from_value(value).map_err(decode_err)?;
        check_version(w.schema_version)?;
        let params = DendrimerParams::new(w.n, w.k)?;
        let report = IndexReport {
            params,
            vertices: parse_int("vertices", &w.vertices)?,
            edges: parse_int("edges", &w.edges)?,
            leaves: parse_int("leaves", &w.leaves)?,
            table: parse_table(params, &w.counts)?,
            wiener: parse_int("wiener", &w.wiener)?,
            average_distance: parse_ratio("average_distance", &w.average_distance)?,
            medium_domination: w
                .medium_domination
                .iter()
                .map(|s| Ok((s.sigma, parse_ratio("medium_domination", &s.value)?)))
                .collect::<Result<_>>()?,
        };
        Ok(ReportDocument {
            schema_version: w.schema_version,
            payload: Payload::Index(report),
        })
    } else if has("checks") {
        let w: VerificationWire = serde_json::from_value(value).map_err(decode_err)?;
        check_version(w.schema_version)?;
        let summary = VerificationSummary {
            checks: w
                .checks
                .into_iter()
                .map(|c| CheckOutcome {
                    family: c.family,
                    instances: c.instances,
                    passed: c.passed,
                })
                .collect(),
            counterexample: w.counterexample,
        };
        if summary.passed() != w.passed {
            return Err(Error::Report("passed flag contradicts checks".into()));
        }
        Ok(ReportDocument {
            schema_version: w.schema_version,
            payload: Payload::Verification(summary),
        })
    } else {
        let w: TableWire = serde_json::from_value(value).map_err(decode_err)?;
        check_version(w.schema_version)?;
        let params = DendrimerParams::new(w.n, w.k)?;
        Ok(ReportDocument {
            schema_version: w.schema_version,
            payload: Payload::Table(parse_table(params, &w.counts)?),
        })
    }
}

/// `length,count` header then one row per length.
pub fn to_csv(table: &PathLengthTable) -> String {
    let mut out = String::from("length,count\n");
    for (l, c) in table.iter() {
        writeln!(out, "{l},{c}").unwrap();
    }
    out
}

/// `quantity,value` rows for a full report.
pub fn report_to_csv(r: &IndexReport) -> String {
    let mut out = String::from("quantity,value\n");
    let mut row = |q: &str, v: &dyn std::fmt::Display| writeln!(out, "{q},{v}").unwrap();
    row("n", &r.params.n());
    row("k", &r.params.k());
    row("vertices", &r.vertices);
    row("edges", &r.edges);
    row("leaves", &r.leaves);
    for (l, c) in r.table.iter() {
        row(&format!("paths_{l}"), c);
    }
    row("wiener", &r.wiener);
    row("average_distance", &r.average_distance);
    for (s, g) in &r.medium_domination {
        row(&format!("medium_domination_{s}"), g);
    }
    out
}

/// `sigma,value` rows.
pub fn medium_domination_to_csv(rows: &[(u32, ExactRatio)]) -> String {
    let mut out = String::from("sigma,value\n");
    for (s, g) in rows {
        writeln!(out, "{s},{g}").unwrap();
    }
    out
}

pub fn table_to_text(table: &PathLengthTable) -> String {
    let mut out = format!("paths by length in {}\n", table.params());
    for (l, c) in table.iter() {
        writeln!(out, "{l:>4}  {c}").unwrap();
    }
    out
}

pub fn report_to_text(r: &IndexReport, wiener_closed: Option<&ExactInt>) -> String {
    let mut out = String::new();
    writeln!(out, "{}", r.params).unwrap();
    writeln!(out, "vertices          {}", r.vertices).unwrap();
    writeln!(out, "edges             {}", r.edges).unwrap();
    writeln!(out, "leaves            {}", r.leaves).unwrap();
    writeln!(out, "diameter          {}", r.params.diameter()).unwrap();
    writeln!(out, "paths by length").unwrap();
    for (l, c) in r.table.iter() {
        writeln!(out, "{l:>4}  {c}").unwrap();
    }
    writeln!(out, "wiener (sum)      {}", r.wiener).unwrap();
    if let Some(w) = wiener_closed {
        writeln!(out, "wiener (closed)   {w}").unwrap();
    }
    writeln!(out, "average distance  {}", r.average_distance).unwrap();
    if !r.medium_domination.is_empty() {
        writeln!(out, "medium domination").unwrap();
        for (s, g) in &r.medium_domination {
            writeln!(out, "  sigma={s:<3} {g}").unwrap();
        }
    }
    out
}

pub fn verification_to_text(s: &VerificationSummary) -> String {
    let mut out = String::new();
    for c in &s.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{tag} {} ({} instances)", c.family, c.instances).unwrap();
    }
    if let Some(cx) = &s.counterexample {
        writeln!(out, "counterexample: {cx}").unwrap();
    }
    writeln!(out, "{}", if s.passed() { "all checks passed" } else { "verification FAILED" })
        .unwrap();
    out
}

fn parse_header(line: &str) -> Option<(u32, u32, usize)> {
    let rest = line.strip_prefix('#')?.trim().strip_prefix("dendrimer")?;
    let mut n = None;
    let mut k = None;
    let mut v = None;
    for tok in rest.split_whitespace() {
        let (key, val) = tok.split_once('=')?;
        match key {
            "n" => n = val.parse().ok(),
            "k" => k = val.parse().ok(),
            "V" => v = val.parse().ok(),
            _ => return None,
        }
    }
    Some((n?, k?, v?))
}

fn parse_vertex(tok: &str, line: usize) -> Result<u32> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            line,
            message: format!("expected a vertex id, got {tok:?}"),
        });
    }
    tok.parse().map_err(|e| Error::Parse {
        line,
        message: format!("vertex id {tok:?}: {e}"),
    })
}

/// Parses `u v` lines (blank lines and `#` comments ignored) into a tree
/// rooted at vertex 0. A `# dendrimer n=.. k=.. V=..` header is honoured
/// only if the edges really are that dendrimer.
pub fn from_edge_list(text: &str) -> Result<TreeGraph> {
    let mut edges = Vec::new();
    let mut header = None;
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if header.is_none() {
                header = parse_header(line);
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two vertex ids, found {} fields", toks.len()),
            });
        }
        let u = parse_vertex(toks[0], line_no)?;
        let v = parse_vertex(toks[1], line_no)?;
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let Some(max_id) = max_id else {
        return Err(Error::InvalidTree("edge list contains no edges".into()));
    };
    let vertex_count = max_id as usize + 1;
    let graph = TreeGraph::from_edges(vertex_count, &edges)?;

    if let Some((n, k, v)) = header {
        let params = DendrimerParams::new(n, k)?;
        if v != vertex_count {
            return Err(Error::InvalidTree(format!(
                "header declares V={v} but edges span {vertex_count} vertices"
            )));
        }
        let expected = build_dendrimer_with(&params, &OracleLimits::new(vertex_count as u64))?;
        if expected.edges() != graph.edges() {
            return Err(Error::InvalidTree(format!(
                "edges do not match the labeling of {params} declared in the header"
            )));
        }
        return Ok(graph.with_origin(Some(params)));
    }
    Ok(graph)
}
