//! JSON reports of verification runs.

use std::time::Duration;

use hfold_chevalley::Check;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub paper_anchor: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// A suite report with checks sorted by id. `elapsed` is the only field
/// that varies between runs.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckEntry>,
    pub elapsed: f64,
}

impl Report {
    pub fn new(suite: impl Into<String>, mut checks: Vec<Check>, elapsed: Duration) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let checks = checks
            .into_iter()
            .map(|c| CheckEntry { id: c.id, paper_anchor: c.anchor, status: if c.passed { "pass" } else { "fail" }, witness: c.witness })
            .collect();
        Report { suite: suite.into(), checks, elapsed: (elapsed.as_secs_f64() * 1000.0).round() / 1000.0 }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable") + "\n"
    }
}
