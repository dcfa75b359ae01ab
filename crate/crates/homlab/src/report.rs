//! Check reports and their JSON-lines / CSV serializations.
//!
//! A report serializes as one `record` line per checked instance followed by a
//! single `summary` line. Wall time is kept in memory and only written when
//! explicitly requested, so default output is a pure function of the inputs.

use std::cmp::Ordering;
use std::fmt;
use std::io::{self, Write};
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Less,
    Equal,
    Greater,
    Match,
    Mismatch,
}

impl Outcome {
    pub fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Outcome::Less,
            Ordering::Equal => Outcome::Equal,
            Ordering::Greater => Outcome::Greater,
        }
    }

    pub fn matching(ok: bool) -> Self {
        if ok {
            Outcome::Match
        } else {
            Outcome::Mismatch
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Less => "LESS",
            Outcome::Equal => "EQUAL",
            Outcome::Greater => "GREATER",
            Outcome::Match => "MATCH",
            Outcome::Mismatch => "MISMATCH",
        })
    }
}

/// Census parameters a sweep ran over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusScope {
    pub d: usize,
    pub n_max: usize,
    pub filters: String,
}

/// One checked instance. For comparisons `value` belongs to the census graph
/// and `reference` to the extremal graph; `ok` is false exactly for
/// counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub graph6: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub value: String,
    pub reference: String,
    pub outcome: Outcome,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub value: String,
    pub reference: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub sampled: usize,
    /// graph6 (or label) of each record whose recount disagreed.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verified: bool,
    pub status: String,
    pub records: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Backing {
    /// A failure is a bug.
    Theorem,
    /// Open statement; counterexamples are findings.
    Conjecture,
    /// Exploratory search; no outcome is asserted.
    Exploration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub target: String,
    pub backing: Backing,
    pub census: Option<CensusScope>,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub wall_time: Duration,
}

pub const STATUS_VERIFIED: &str = "verified";
pub const STATUS_CONSISTENT: &str = "consistent at tested scale";
pub const STATUS_COUNTEREXAMPLE: &str = "counterexample found";

impl CheckReport {
    /// Builds the summary from the records: counterexamples are the records
    /// with `ok == false`.
    pub fn new(check: impl Into<String>, target: impl Into<String>, backing: Backing, census: Option<CensusScope>, records: Vec<Record>) -> Self {
        let counterexamples: Vec<Counterexample> = records
            .iter()
            .filter(|r| !r.ok)
            .map(|r| Counterexample { graph6: r.graph6.clone(), label: r.label.clone(), value: r.value.clone(), reference: r.reference.clone() })
            .collect();
        let verified = counterexamples.is_empty();
        let status = match (verified, backing) {
            (false, _) => STATUS_COUNTEREXAMPLE,
            (true, Backing::Theorem) => STATUS_VERIFIED,
            (true, _) => STATUS_CONSISTENT,
        };
        CheckReport {
            check: check.into(),
            target: target.into(),
            backing,
            census,
            summary: Summary { verified, status: status.to_string(), records: records.len(), counterexamples, audit: None, notes: Vec::new() },
            records,
            wall_time: Duration::ZERO,
        }
    }

    pub fn audit_failures(&self) -> usize {
        self.summary.audit.as_ref().map_or(0, |a| a.failures.len())
    }

    /// A theorem-backed check with a counterexample, or any audit mismatch.
    pub fn is_failure(&self) -> bool {
        (self.backing == Backing::Theorem && !self.summary.verified) || self.audit_failures() > 0
    }

    /// One line for humans, e.g. on stderr.
    pub fn headline(&self) -> String {
        let scope = self.census.as_ref().map(|c| format!(" d={} n<={} filters={}", c.d, c.n_max, c.filters)).unwrap_or_default();
        let audit = self.summary.audit.as_ref().map(|a| format!(", audit {}/{} ok", a.sampled - a.failures.len(), a.sampled)).unwrap_or_default();
        format!(
            "[{}] {} H={}{}: {} records, {} counterexamples{} ({})",
            if self.is_failure() { "FAIL" } else { "ok" },
            self.check,
            self.target,
            scope,
            self.summary.records,
            self.summary.counterexamples.len(),
            audit,
            self.summary.status,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct WriteOptions {
    pub format: Format,
    pub timings: bool,
}

#[derive(Serialize)]
struct RecordLine<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    check: &'a str,
    target: &'a str,
    #[serde(flatten)]
    record: &'a Record,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    #[serde(rename = "type")]
    kind: &'static str,
    check: &'a str,
    target: &'a str,
    backing: Backing,
    #[serde(skip_serializing_if = "Option::is_none")]
    census: Option<&'a CensusScope>,
    #[serde(flatten)]
    summary: &'a Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u128>,
}

pub const CSV_HEADER: [&str; 9] = ["check", "target", "graph6", "n", "label", "value", "reference", "outcome", "ok"];

fn write_json<W: Write>(out: &mut W, reports: &[CheckReport], timings: bool) -> io::Result<()> {
    for rep in reports {
        for record in &rep.records {
            let line = RecordLine { kind: "record", check: &rep.check, target: &rep.target, record };
            serde_json::to_writer(&mut *out, &line)?;
            writeln!(out)?;
        }
        let line = SummaryLine {
            kind: "summary",
            check: &rep.check,
            target: &rep.target,
            backing: rep.backing,
            census: rep.census.as_ref(),
            summary: &rep.summary,
            wall_time_ms: timings.then_some(rep.wall_time.as_millis()),
        };
        serde_json::to_writer(&mut *out, &line)?;
        writeln!(out)?;
    }
    Ok(())
}

fn summary_comment(rep: &CheckReport, timings: bool) -> String {
    let mut line = format!(
        "#summary check={} target={} verified={} status={:?} records={} counterexamples={}",
        rep.check,
        rep.target,
        rep.summary.verified,
        rep.summary.status,
        rep.summary.records,
        rep.summary.counterexamples.len()
    );
    if let Some(a) = &rep.summary.audit {
        line += &format!(" audited={} audit_failures={}", a.sampled, a.failures.len());
    }
    if timings {
        line += &format!(" wall_time_ms={}", rep.wall_time.as_millis());
    }
    line
}

fn write_csv<W: Write>(out: &mut W, reports: &[CheckReport], timings: bool) -> io::Result<()> {
    {
        let mut csv = csv::Writer::from_writer(&mut *out);
        csv.write_record(CSV_HEADER)?;
        csv.flush()?;
    }
    for rep in reports {
        // a fresh writer per report so the comment line can go straight to `out`
        let mut csv = csv::Writer::from_writer(&mut *out);
        for r in &rep.records {
            let n = r.n.to_string();
            let outcome = r.outcome.to_string();
            let ok = if r.ok { "true" } else { "false" };
            let label = r.label.as_deref().unwrap_or("");
            csv.write_record([&rep.check, &rep.target, &r.graph6, &n, label, &r.value, &r.reference, &outcome, ok])?;
        }
        csv.flush()?;
        drop(csv);
        writeln!(out, "{}", summary_comment(rep, timings))?;
    }
    Ok(())
}

/// Writes reports in order. CSV output has one header line, one row per
/// record, and one `#summary` comment line per report.
pub fn write_reports<W: Write>(out: &mut W, reports: &[CheckReport], opts: WriteOptions) -> io::Result<()> {
    match opts.format {
        Format::Json => write_json(out, reports, opts.timings),
        Format::Csv => write_csv(out, reports, opts.timings),
    }
}

pub fn reports_to_string(reports: &[CheckReport], opts: WriteOptions) -> String {
    let mut buf = Vec::new();
    write_reports(&mut buf, reports, opts).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("reports are UTF-8")
}
