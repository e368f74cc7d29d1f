//! Check records and verification reports.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::fock::StateVector;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub params: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CheckRecord {
    pub fn pass(id: impl Into<String>, params: Value) -> Self {
        CheckRecord {
            id: id.into(),
            params,
            pass: true,
            counterexample: None,
        }
    }

    pub fn fail(id: impl Into<String>, params: Value, counterexample: Value) -> Self {
        CheckRecord {
            id: id.into(),
            params,
            pass: false,
            counterexample: Some(counterexample),
        }
    }

    /// Passes when `failure` is `None`.
    pub fn from_outcome(id: impl Into<String>, params: Value, failure: Option<Value>) -> Self {
        match failure {
            None => CheckRecord::pass(id, params),
            Some(c) => CheckRecord::fail(id, params, c),
        }
    }
}

/// Counterexample payload for an operator identity `lhs(s) = rhs(s)`.
pub fn mismatch<S: Scalar + Serialize>(
    input: &StateVector<S>,
    lhs: &StateVector<S>,
    rhs: &StateVector<S>,
) -> Value {
    serde_json::json!({
        "input": input,
        "lhs": lhs,
        "rhs": rhs,
    })
}

/// First input where `lhs(s) != rhs(s)`, as a counterexample payload.
pub fn first_mismatch<S, L, R>(inputs: &[StateVector<S>], lhs: L, rhs: R) -> Option<Value>
where
    S: Scalar + Serialize,
    L: Fn(&StateVector<S>) -> StateVector<S>,
    R: Fn(&StateVector<S>) -> StateVector<S>,
{
    inputs.iter().find_map(|s| {
        let (l, r) = (lhs(s), rhs(s));
        (l != r).then(|| mismatch(s, &l, &r))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub status: Status,
    pub summary: Summary,
    pub wall_time_ms: u128,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    /// Sorts records by id, so aggregation order does not matter.
    pub fn new(suite: impl Into<String>, mut checks: Vec<CheckRecord>, wall_time_ms: u128) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = checks.iter().filter(|c| c.pass).count();
        let total = checks.len();
        VerificationReport {
            suite: suite.into(),
            status: if passed == total {
                Status::Pass
            } else {
                Status::Fail
            },
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
            wall_time_ms,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn status_tracks_records() {
        let ok = VerificationReport::new("x", vec![CheckRecord::pass("b", json!({}))], 0);
        assert!(ok.passed());
        assert_eq!(ok.failures().count(), 0);
        let bad = VerificationReport::new(
            "x",
            vec![
                CheckRecord::pass("b", json!({})),
                CheckRecord::fail("a", json!({}), json!("boom")),
            ],
            0,
        );
        assert!(!bad.passed());
        assert_eq!(bad.checks[0].id, "a");
        assert_eq!(bad.summary.failed, 1);
        assert!(bad
            .checks
            .iter()
            .all(|c| c.pass == c.counterexample.is_none()));
    }
}
