//! Machine-readable suite reports.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The statement this check verifies.
    pub source: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    /// Wall-clock seconds per check; present only when requested, so that
    /// reports from equal seeds compare byte for byte.
    pub timing: Option<Vec<(String, f64)>>,
}

impl Report {
    pub fn new(suite: &str, seed: Option<u64>) -> Report {
        Report { suite: suite.to_string(), seed, checks: Vec::new(), timing: None }
    }

    pub fn push(&mut self, id: &str, source: &str, ok: bool, witness: Value) {
        self.push_status(id, source, Status::from_bool(ok), witness);
    }

    pub fn push_status(&mut self, id: &str, source: &str, status: Status, witness: Value) {
        self.checks.push(Check { id: id.to_string(), source: source.to_string(), status, witness });
    }

    /// Record a check that could not run because of an error.
    pub fn push_error(&mut self, id: &str, source: &str, err: impl std::fmt::Display) {
        self.push(id, source, false, serde_json::json!({ "error": err.to_string() }));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per check: id, status, source, compact witness.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("id\tstatus\tsource\twitness\n");
        for c in &self.checks {
            let _ = writeln!(s, "{}\t{}\t{}\t{}", c.id, c.status.as_str(), c.source, c.witness);
        }
        s
    }
}

/// Runs checks and optionally records how long each took.
pub struct Timer {
    enabled: bool,
    entries: Vec<(String, f64)>,
}

impl Timer {
    pub fn new(enabled: bool) -> Timer {
        Timer { enabled, entries: Vec::new() }
    }

    pub fn time<T>(&mut self, label: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.entries.push((label.to_string(), start.elapsed().as_secs_f64()));
        }
        out
    }

    pub fn finish(self, report: &mut Report) {
        if self.enabled {
            report.timing = Some(self.entries);
        }
    }
}
