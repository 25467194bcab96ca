//! Machine-readable verification reports, emitted one JSON object per line.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

/// A single failed equation: which check, where, and both sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    pub fn new(
        check: impl Into<String>,
        location: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Violation {
        Violation {
            check: check.into(),
            location: location.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    Unsupported,
    InputError,
}

impl Status {
    /// Process exit code for this outcome.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass | Status::Vacuous => 0,
            Status::Fail => 1,
            Status::InputError => 2,
            Status::Unsupported => 3,
        }
    }

    /// Severity used to combine several outcomes into one exit code.
    fn rank(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Vacuous => 1,
            Status::Fail => 4,
            Status::Unsupported => 2,
            Status::InputError => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub instance: String,
    pub seed: Option<u64>,
    pub hypotheses: BTreeMap<String, Value>,
    pub conclusion: Value,
    pub violations: Vec<Violation>,
    pub status: Status,
}

impl Report {
    pub fn new(command: impl Into<String>, instance: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            instance: instance.into(),
            seed: None,
            hypotheses: BTreeMap::new(),
            conclusion: Value::Null,
            violations: Vec::new(),
            status: Status::Pass,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Report {
        self.seed = Some(seed);
        self
    }

    pub fn hypothesis(&mut self, name: impl Into<String>, value: impl Into<Value>) {
        self.hypotheses.insert(name.into(), value.into());
    }

    /// Appends violations; a non-empty list forces `status = fail`.
    pub fn extend_violations(&mut self, v: impl IntoIterator<Item = Violation>) {
        self.violations.extend(v);
        if !self.violations.is_empty() {
            self.status = Status::Fail;
        }
    }

    pub fn push_violation(&mut self, v: Violation) {
        self.extend_violations([v]);
    }

    /// Marks the report vacuous unless violations already failed it.
    pub fn mark_vacuous(&mut self) {
        if self.status == Status::Pass {
            self.status = Status::Vacuous;
        }
    }

    /// A report describing an error raised while evaluating `command`.
    pub fn from_error(command: impl Into<String>, instance: impl Into<String>, err: &Error) -> Report {
        let mut r = Report::new(command, instance);
        r.status = match err {
            Error::UnsupportedCharacteristic { .. } => Status::Unsupported,
            Error::Internal(_) => Status::Fail,
            _ => Status::InputError,
        };
        r.conclusion = Value::String(err.to_string());
        if let Error::Internal(msg) = err {
            r.violations.push(Violation::new("internal", "", msg.clone(), ""));
        }
        r
    }

    /// The canonical single-line serialization.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json_line(line: &str) -> serde_json::Result<Report> {
        serde_json::from_str(line)
    }
}

/// The most severe status among several reports (empty input passes).
pub fn combined_status(reports: &[Report]) -> Status {
    reports
        .iter()
        .map(|r| r.status)
        .max_by_key(|s| s.rank())
        .unwrap_or(Status::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn violations_force_fail() {
        let mut r = Report::new("radical", "x");
        assert_eq!(r.status, Status::Pass);
        r.mark_vacuous();
        assert_eq!(r.status, Status::Vacuous);
        r.push_violation(Violation::new("assoc", "(0,1,2)", "1", "0"));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.status.exit_code(), 1);
    }

    #[test]
    fn json_line_round_trip_is_byte_identical() {
        let mut r = Report::new("semisimple", "group:Q[S3]").with_seed(42);
        r.hypothesis("eps_t", "6");
        r.hypothesis("valid", true);
        r.conclusion = Value::Bool(true);
        let line = r.to_json_line();
        let back = Report::from_json_line(&line).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json_line(), line);
    }

    #[test]
    fn combined_status_prefers_failures() {
        let mut a = Report::new("a", "");
        a.status = Status::Unsupported;
        let mut b = Report::new("b", "");
        b.push_violation(Violation::new("c", "", "", ""));
        assert_eq!(combined_status(&[a.clone(), b]), Status::Fail);
        assert_eq!(combined_status(&[a]), Status::Unsupported);
        assert_eq!(combined_status(&[]), Status::Pass);
    }
}
