//! Structured check reports shared by the verifiers.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// One checked instance: `{check, indices, status, residual}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub indices: Vec<usize>,
    pub status: Status,
    pub residual: String,
}

impl CheckRecord {
    pub fn new(check: impl Into<String>, indices: Vec<usize>, residual: String, zero: bool) -> Self {
        CheckRecord {
            check: check.into(),
            indices,
            status: if zero { Status::Pass } else { Status::Fail },
            residual,
        }
    }

    pub fn inconclusive(check: impl Into<String>, indices: Vec<usize>, why: impl Into<String>) -> Self {
        CheckRecord { check: check.into(), indices, status: Status::Inconclusive, residual: why.into() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn push(&mut self, r: CheckRecord) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.status == Status::Fail)
    }

    pub fn has_inconclusive(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Inconclusive)
    }

    pub fn count(&self, s: Status) -> usize {
        self.records.iter().filter(|r| r.status == s).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
