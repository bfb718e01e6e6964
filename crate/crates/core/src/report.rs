//! Failure reports shared by every identity checker.

use serde::{Deserialize, Serialize};

/// One failing instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub identity: String,
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new(identity: &str, indices: Vec<usize>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Failure {
            identity: identity.to_string(),
            indices,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    /// A nonzero residual of an identity written as `expr = 0`.
    pub fn residual(identity: &str, indices: Vec<usize>, residual: impl ToString) -> Self {
        Self::new(identity, indices, residual, "0")
    }
}

/// Outcome of checking one identity over all of its instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(identity: &str) -> Self {
        CheckReport {
            identity: identity.to_string(),
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn from_results(identity: &str, results: Vec<Option<Failure>>) -> Self {
        let checked = results.len();
        CheckReport {
            identity: identity.to_string(),
            checked,
            failures: results.into_iter().flatten().collect(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, failure: Option<Failure>) {
        self.checked += 1;
        if let Some(f) = failure {
            self.failures.push(f);
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// All reports passed.
pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The configuration a suite ran with; fields that do not apply are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub n: usize,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub weyl_copies: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub statistics: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_constant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub copies: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<u32>,
}

/// Per-identity line of a [`SuiteReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub identity: String,
    pub checked: usize,
    pub failed: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Aggregate result of one verification run. `status` is `Pass` exactly when
/// `failures` is empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: SuiteConfig,
    pub status: Status,
    pub failures: Vec<Failure>,
    pub checks: Vec<CheckSummary>,
    /// Seconds.
    pub wall_time: f64,
}

impl SuiteReport {
    pub fn new(suite: &str, config: SuiteConfig, reports: &[CheckReport], wall_time: f64) -> Self {
        let failures: Vec<Failure> = reports.iter().flat_map(|r| r.failures.iter().cloned()).collect();
        SuiteReport {
            suite: suite.to_string(),
            config,
            status: if failures.is_empty() { Status::Pass } else { Status::Fail },
            failures,
            checks: reports
                .iter()
                .map(|r| CheckSummary {
                    identity: r.identity.clone(),
                    checked: r.checked,
                    failed: r.failures.len(),
                    notes: r.notes.clone(),
                })
                .collect(),
            wall_time,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_failures() {
        let mut bad = CheckReport::new("x");
        bad.record(Some(Failure::residual("x", vec![1, 2], "h1")));
        let ok = CheckReport::new("y");
        let cfg = SuiteConfig { n: 2, ..Default::default() };
        assert!(SuiteReport::new("s", cfg.clone(), &[ok.clone()], 0.0).passed());
        let r = SuiteReport::new("s", cfg, &[ok, bad], 0.0);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.checks[1].failed, 1);
    }

    #[test]
    fn json_shape() {
        let cfg = SuiteConfig { n: 2, weyl_copies: Some(2), ..Default::default() };
        let mut bad = CheckReport::new("x");
        bad.record(Some(Failure::new("x", vec![1], "a", "b")));
        let v = serde_json::to_value(SuiteReport::new("weyl", cfg, &[bad], 1.5)).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["config"]["N"], 2);
        assert!(v["config"].get("copies").is_none());
        assert_eq!(v["failures"][0]["identity"], "x");
        for key in ["indices", "lhs", "rhs"] {
            assert!(v["failures"][0].get(key).is_some());
        }
        assert_eq!(v["wall_time"], 1.5);
    }
}
