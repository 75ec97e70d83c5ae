//! Versioned verification reports.

use serde::{Deserialize, Serialize};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// What the check reproduces, in words.
    pub anchor: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: &str, pass: bool, expected: impl ToString, actual: impl ToString) -> Check {
        Check {
            id: id.into(),
            anchor: anchor.to_string(),
            pass,
            expected: expected.to_string(),
            actual: actual.to_string(),
            note: None,
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub report_version: u32,
    pub suite: String,
    pub checks: Vec<Check>,
    pub wall_time_ms: u64,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, checks: Vec<Check>, wall_time_ms: u64) -> Report {
        let passed = checks.iter().filter(|c| c.pass).count();
        let summary = Summary { total: checks.len(), passed, failed: checks.len() - passed };
        Report { report_version: REPORT_VERSION, suite: suite.to_string(), checks, wall_time_ms, summary }
    }

    pub fn pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    /// One row per check: `id,anchor,pass,expected,actual,note`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["id", "anchor", "pass", "expected", "actual", "note"]).expect("in memory");
        for c in &self.checks {
            let pass = if c.pass { "true" } else { "false" };
            w.write_record([&c.id, &c.anchor, pass, &c.expected, &c.actual, c.note.as_deref().unwrap_or("")])
                .expect("in memory");
        }
        String::from_utf8(w.into_inner().expect("in memory")).expect("utf-8 fields")
    }
}
