//! Verification reports and their JSON, CSV and text renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Outcome of one parameter point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Pass,
    Fail,
    /// Outside the range where the statement applies; recorded, not asserted.
    Informational,
    /// No graph satisfies the constraints.
    EmptyClass,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Pass => "pass",
            RowStatus::Fail => "fail",
            RowStatus::Informational => "informational",
            RowStatus::EmptyClass => "empty_class",
        }
    }

    fn asserting(&self) -> bool {
        matches!(self, RowStatus::Pass | RowStatus::Fail)
    }
}

/// One parameter point of a verification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub r: Option<usize>,
    /// p or α, when the statement has one.
    pub param: Option<f64>,
    pub found: Option<f64>,
    pub expected: Option<f64>,
    /// Extremal classes as graph6 strings.
    pub witnesses: Vec<String>,
    pub unique: bool,
    pub status: RowStatus,
    pub note: String,
}

/// Result of checking one catalogued statement over a parameter range.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub statement: String,
    pub rows: Vec<ReportRow>,
    /// Every asserting row passed and at least one row asserted. Vacuously
    /// true, with a warning, when the parameter range produced no rows.
    pub pass: bool,
    pub warnings: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(theorem: &str, statement: &str, rows: Vec<ReportRow>) -> Self {
        let mut warnings = Vec::new();
        let pass = if rows.is_empty() {
            warnings.push("parameter range produced no rows".to_string());
            true
        } else {
            let asserting: Vec<_> = rows.iter().filter(|r| r.status.asserting()).collect();
            if asserting.is_empty() {
                warnings.push("no row in range asserts the statement".to_string());
            }
            !asserting.is_empty() && asserting.iter().all(|r| r.status == RowStatus::Pass)
        };
        VerificationReport {
            theorem: theorem.to_string(),
            statement: statement.to_string(),
            rows,
            pass,
            warnings,
        }
    }
}

/// Output format of [`emit_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            _ => Err(Error::Domain(format!(
                "unknown format {s:?}; expected json, csv or text"
            ))),
        }
    }
}

/// Ten significant digits.
pub(crate) fn fmt_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    if x.abs() < 1e-6 || x.abs() >= 1e15 {
        return format!("{x:.9e}");
    }
    let digits = 10 - 1 - x.abs().log10().floor() as i32;
    let s = format!("{:.*}", digits.max(0) as usize, x);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn opt_num(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders a report. CSV has one line per row under the header
/// `theorem,n,r,param,found,expected,witnesses,unique,pass`, with witnesses
/// joined by `;` and `pass` holding the row status.
pub fn emit_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        ReportFormat::Csv => {
            let mut out = String::from("theorem,n,r,param,found,expected,witnesses,unique,pass\n");
            for row in &report.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    csv_field(&report.theorem),
                    row.n,
                    row.r.map(|r| r.to_string()).unwrap_or_default(),
                    opt_num(row.param),
                    opt_num(row.found),
                    opt_num(row.expected),
                    csv_field(&row.witnesses.join(";")),
                    row.unique,
                    row.status.as_str(),
                );
            }
            out
        }
        ReportFormat::Text => {
            let mut out = format!("{}: {}\n", report.theorem, report.statement);
            for row in &report.rows {
                let mut line = format!("  n={}", row.n);
                if let Some(r) = row.r {
                    let _ = write!(line, " r={r}");
                }
                if let Some(p) = row.param {
                    let _ = write!(line, " param={}", fmt_num(p));
                }
                let _ = write!(
                    line,
                    " found={} expected={} witnesses={} unique={} {}",
                    opt_num(row.found),
                    opt_num(row.expected),
                    row.witnesses.len(),
                    row.unique,
                    row.status.as_str().to_uppercase()
                );
                if !row.note.is_empty() {
                    let _ = write!(line, " ({})", row.note);
                }
                out.push_str(&line);
                out.push('\n');
            }
            for w in &report.warnings {
                let _ = writeln!(out, "  warning: {w}");
            }
            let _ = writeln!(out, "{}: {}", report.theorem, if report.pass { "PASS" } else { "FAIL" });
            out
        }
    }
}
