use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::checks::{CheckDefinition, CheckStatus, Severity};
use super::sweep::SweepRecord;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCounts {
    pub severity: Option<Severity>,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub check: String,
    pub severity: Option<Severity>,
    pub key: String,
    pub n: usize,
    pub m: usize,
    pub ec_lo: usize,
    pub ec_hi: usize,
    pub certificate: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub records: usize,
    pub exact: usize,
    pub counts: BTreeMap<String, CheckCounts>,
    pub discrepancies: Vec<Discrepancy>,
}

impl SweepReport {
    pub fn assert_failures(&self) -> usize {
        self.counts
            .values()
            .filter(|c| c.severity == Some(Severity::Assert))
            .map(|c| c.fail)
            .sum()
    }

    pub fn failures_of(&self, check: &str) -> Vec<&Discrepancy> {
        self.discrepancies.iter().filter(|d| d.check == check).collect()
    }

    /// Plain-text table of counts followed by every discrepancy.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "records: {} ({} exact)", self.records, self.exact);
        let _ = writeln!(
            s,
            "{:<32} {:<8} {:>7} {:>7} {:>7}",
            "check", "severity", "pass", "fail", "skipped"
        );
        for (name, c) in &self.counts {
            let severity = c.severity.map_or("-".to_string(), |s| s.to_string());
            let _ = writeln!(
                s,
                "{:<32} {:<8} {:>7} {:>7} {:>7}",
                name, severity, c.pass, c.fail, c.skipped
            );
        }
        if self.discrepancies.is_empty() {
            let _ = writeln!(s, "no discrepancies");
        } else {
            let _ = writeln!(s, "discrepancies:");
            for d in &self.discrepancies {
                let _ = writeln!(
                    s,
                    "  {} {} n={} m={} ec=[{}, {}] certificate={:?}",
                    d.check, d.key, d.n, d.m, d.ec_lo, d.ec_hi, d.certificate
                );
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Summarizes a set of records. Severities come from `checks`; checks found
/// in the records but not registered are counted with no severity.
pub fn report(records: &[SweepRecord], checks: &[CheckDefinition]) -> SweepReport {
    let severity_of: BTreeMap<&str, Severity> = checks.iter().map(|c| (c.name, c.severity)).collect();
    let mut out = SweepReport {
        records: records.len(),
        exact: records.iter().filter(|r| r.is_exact()).count(),
        ..SweepReport::default()
    };
    for c in checks {
        out.counts.insert(
            c.name.to_string(),
            CheckCounts {
                severity: Some(c.severity),
                ..CheckCounts::default()
            },
        );
    }
    for r in records {
        for (name, status) in &r.checks {
            let severity = severity_of.get(name.as_str()).copied();
            let counts = out.counts.entry(name.clone()).or_insert_with(|| CheckCounts {
                severity,
                ..CheckCounts::default()
            });
            match status {
                CheckStatus::Pass => counts.pass += 1,
                CheckStatus::Skipped(_) => counts.skipped += 1,
                CheckStatus::Fail => {
                    counts.fail += 1;
                    out.discrepancies.push(Discrepancy {
                        check: name.clone(),
                        severity,
                        key: r.key.clone(),
                        n: r.n,
                        m: r.m,
                        ec_lo: r.ec_lo,
                        ec_hi: r.ec_hi,
                        certificate: r.certificate.clone(),
                    });
                }
            }
        }
    }
    out
}
