//! Structured pass/fail records shared by all verification suites.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::matrix::Matrix;
use crate::rings::InvolutiveRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
}

/// `config` is a sorted map so that serialisation is deterministic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub config: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), config: BTreeMap::new(), checks: Vec::new(), elapsed_ms: 0 }
    }

    pub fn set_config(&mut self, key: &str, value: impl Into<Value>) {
        self.config.insert(key.to_string(), value.into());
    }

    pub fn record(&mut self, id: impl Into<String>, pass: bool, witness: Option<Value>) {
        let status = if pass { Status::Pass } else { Status::Fail };
        self.checks.push(Check { id: id.into(), status, witness });
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.record(id, true, None);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self) -> (usize, usize) {
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        (passed, self.checks.len() - passed)
    }

    /// Append another report's checks, prefixing their ids with its suite name.
    pub fn absorb(&mut self, other: VerificationReport) {
        for (k, v) in other.config {
            self.config.entry(format!("{}.{k}", other.suite)).or_insert(v);
        }
        for mut c in other.checks {
            c.id = format!("{}/{}", other.suite, c.id);
            self.checks.push(c);
        }
        self.elapsed_ms += other.elapsed_ms;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// JSON with the timing field zeroed, for reproducibility comparisons.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0;
        copy.to_json()
    }
}

/// Nonzero entries of `a - b` (at most `limit`) as `[row, col, value]`.
pub fn difference_witness<R: InvolutiveRing>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>, limit: usize) -> Value {
    let mut entries = Vec::new();
    let mut total = 0usize;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let d = ring.sub(a.get(i, j), b.get(i, j));
            if !ring.is_zero(&d) {
                total += 1;
                if entries.len() < limit {
                    entries.push(serde_json::json!([i, j, ring.format(&d)]));
                }
            }
        }
    }
    serde_json::json!({ "nonzero_entries": total, "first": entries })
}

/// Compare two matrices and record the outcome with a difference witness.
pub fn record_equal<R: InvolutiveRing>(
    report: &mut VerificationReport,
    ring: &R,
    id: impl Into<String>,
    lhs: &Matrix<R::Elem>,
    rhs: &Matrix<R::Elem>,
) -> bool {
    let ok = lhs == rhs;
    report.record(id, ok, (!ok).then(|| difference_witness(ring, lhs, rhs, 8)));
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Rational, Rationals};

    #[test]
    fn json_shape_and_status() {
        let mut r = VerificationReport::new("demo");
        r.set_config("type", "A3");
        r.pass("one");
        let m = Matrix::from_vec(1, 2, vec![Rational::from_integer(1), Rational::from_integer(0)]);
        let z = Matrix::zeros(&Rationals, 1, 2);
        assert!(!record_equal(&mut r, &Rationals, "two", &m, &z));
        assert!(!r.all_pass());
        assert_eq!(r.count(), (1, 1));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][0]["status"], "pass");
        assert!(v["checks"][0].get("witness").is_none());
        assert_eq!(v["checks"][1]["witness"]["nonzero_entries"], 1);
        assert_eq!(v["config"]["type"], "A3");
        let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn empty_report_passes() {
        assert!(VerificationReport::new("empty").all_pass());
    }
}
