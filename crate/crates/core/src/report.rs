//! Machine-readable check reports: one JSON object per check, suitable for
//! line-oriented CI consumption.

use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub ms: u128,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Collects checks and timing; the single funnel every subcommand reports
/// through.
#[derive(Default)]
pub struct Reporter {
    pub checks: Vec<Check>,
}

impl Reporter {
    pub fn new() -> Reporter {
        Reporter::default()
    }

    /// Record an equality check between displayable values.
    pub fn check_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        actual: T,
    ) {
        let start = Instant::now();
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            expected: expected.to_string(),
            actual: actual.to_string(),
            ms: start.elapsed().as_millis(),
        });
    }

    /// Record a boolean check, with a timed closure.
    pub fn check(&mut self, name: impl Into<String>, expected: impl Into<String>, f: impl FnOnce() -> (bool, String)) {
        let start = Instant::now();
        let (ok, actual) = f();
        self.checks.push(Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: expected.into(),
            actual,
            ms: start.elapsed().as_millis(),
        });
    }

    pub fn note(&mut self, name: impl Into<String>, status: Status, expected: impl Into<String>, actual: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            expected: expected.into(),
            actual: actual.into(),
            ms: 0,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn pass_count(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count()
    }

    pub fn extend(&mut self, other: Reporter) {
        self.checks.extend(other.checks);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_lines_round_trip() {
        let mut r = Reporter::new();
        r.check_eq("answer", 42, 42);
        r.check_eq("mismatch", 1, 2);
        assert!(!r.all_passed());
        assert_eq!(r.pass_count(), 1);
        let line = r.checks[0].to_json_line();
        let parsed: Check = serde_json::from_str(&line).unwrap();
        assert_eq!(parsed.status, Status::Pass);
        assert_eq!(parsed.name, "answer");
    }
}
