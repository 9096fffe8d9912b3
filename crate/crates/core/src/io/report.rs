//! Report rendering: a fixed-width table for people and JSON lines for tools.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::verifier::{Counts, Summary, TheoremReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Human,
    Machine,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "human" => Ok(ReportFormat::Human),
            "machine" => Ok(ReportFormat::Machine),
            other => Err(format!("unknown format {other:?} (expected human or machine)")),
        }
    }
}

/// Options shared by every emitter.
#[derive(Clone, Copy, Debug, Default)]
pub struct EmitOptions {
    pub format: ReportFormat,
    /// Include wall-clock timings. Off by default so machine output is reproducible.
    pub timings: bool,
}

const HEADER: [&str; 5] = ["THEOREM", "INSTANCE", "HYPOTHESES", "CONCLUSION", "VERDICT"];
const THEOREM_WIDTH: usize = 9;
const FLAG_WIDTH: usize = 11;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// One JSON object per report, fields in declaration order.
pub fn report_record(report: &TheoremReport, timings: bool) -> Value {
    let mut v = serde_json::to_value(report).expect("reports serialize");
    if !timings {
        v.as_object_mut().expect("object").remove("runtime_ms");
    }
    v
}

pub fn emit_reports(reports: &[TheoremReport], options: EmitOptions) -> String {
    let mut out = String::new();
    match options.format {
        ReportFormat::Machine => {
            for r in reports {
                out.push_str(&report_record(r, options.timings).to_string());
                out.push('\n');
            }
        }
        ReportFormat::Human => {
            let instance_width = reports
                .iter()
                .map(|r| r.instance_id.len())
                .max()
                .unwrap_or(0)
                .max(HEADER[1].len());
            let mut row = |cells: [&str; 5], runtime: Option<f64>| {
                let _ = write!(
                    out,
                    "{:<tw$} {:<iw$} {:<fw$} {:<fw$} {}",
                    cells[0],
                    cells[1],
                    cells[2],
                    cells[3],
                    cells[4],
                    tw = THEOREM_WIDTH,
                    iw = instance_width,
                    fw = FLAG_WIDTH
                );
                if let Some(ms) = runtime {
                    let _ = write!(out, " {ms:.2}ms");
                }
                out.push('\n');
            };
            row(HEADER, None);
            for r in reports {
                let conclusion = match r.conclusion_holds {
                    Some(b) => yes_no(b),
                    None => "-",
                };
                let verdict = r.verdict.to_string();
                row(
                    [
                        r.theorem_id.as_str(),
                        &r.instance_id,
                        yes_no(r.hypotheses_hold),
                        conclusion,
                        &verdict,
                    ],
                    options.timings.then_some(r.runtime_ms),
                );
            }
        }
    }
    out
}

fn counts_record(c: &Counts) -> Value {
    serde_json::to_value(c).expect("counts serialize")
}

pub fn emit_summary(summary: &Summary, format: ReportFormat) -> String {
    match format {
        ReportFormat::Machine => {
            let mut v = json!({
                "summary": {
                    "instances": summary.instances,
                    "totals": counts_record(&summary.totals),
                    "per_theorem": summary.per_theorem.iter()
                        .map(|(k, c)| (k.clone(), counts_record(c)))
                        .collect::<serde_json::Map<_, _>>(),
                    "strict_counterexamples": summary.strict_counterexamples(),
                }
            })
            .to_string();
            v.push('\n');
            v
        }
        ReportFormat::Human => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:<9} {:>8} {:>10} {:>8} {:>14} {:>10} {:>7}",
                "THEOREM", "REPORTS", "HYPOTHESES", "VERIFIED", "COUNTEREXAMPLE", "NEAR_MISS", "ERRORED"
            );
            let rows = summary
                .per_theorem
                .iter()
                .map(|(k, c)| (k.as_str(), c))
                .chain(std::iter::once(("total", &summary.totals)));
            for (name, c) in rows {
                let _ = writeln!(
                    out,
                    "{:<9} {:>8} {:>10} {:>8} {:>14} {:>10} {:>7}",
                    name, c.reports, c.hypotheses_satisfied, c.verified, c.counterexamples, c.near_misses, c.errored
                );
            }
            let _ = writeln!(out, "instances: {}", summary.instances);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{TheoremId, Verdict};
    use std::collections::BTreeMap;

    fn sample() -> TheoremReport {
        TheoremReport {
            theorem_id: TheoremId::A,
            instance_id: "S3#000".into(),
            hypotheses_hold: true,
            clauses: Vec::new(),
            conclusion_holds: Some(true),
            witness: BTreeMap::new(),
            verdict: Verdict::Verified,
            runtime_ms: 1.5,
        }
    }

    #[test]
    fn empty_table_is_header_only() {
        let text = emit_reports(&[], EmitOptions::default());
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("THEOREM"));
        assert_eq!(emit_reports(&[], EmitOptions { format: ReportFormat::Machine, timings: false }), "");
    }

    #[test]
    fn machine_records_drop_runtime_unless_asked() {
        let r = sample();
        let plain = emit_reports(std::slice::from_ref(&r), EmitOptions { format: ReportFormat::Machine, timings: false });
        assert!(!plain.contains("runtime_ms"));
        let timed = emit_reports(&[r], EmitOptions { format: ReportFormat::Machine, timings: true });
        assert!(timed.contains("\"runtime_ms\":1.5"));
        let v: Value = serde_json::from_str(plain.trim()).unwrap();
        assert_eq!(v["verdict"], "VERIFIED");
    }

    #[test]
    fn human_row_columns() {
        let text = emit_reports(&[sample()], EmitOptions::default());
        let row = text.lines().nth(1).unwrap();
        assert!(row.starts_with("A "));
        assert!(row.ends_with("VERIFIED"));
    }
}
