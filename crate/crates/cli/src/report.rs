//! Pass/fail verification reports, serializable as CSV or JSON.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckResult {
    pub check: String,
    pub status: String,
    pub residual: f64,
    pub tolerance: f64,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub overall: String,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record a residual that must stay at or below `tolerance`.
    pub fn push_max(&mut self, check: impl Into<String>, residual: f64, tolerance: f64) {
        let pass = residual <= tolerance;
        self.checks.push(CheckResult {
            check: check.into(),
            status: if pass { "pass" } else { "fail" }.into(),
            residual,
            tolerance,
        });
    }

    /// Record a measured value that must stay at or above `bound`.
    pub fn push_min(&mut self, check: impl Into<String>, measured: f64, bound: f64) {
        let pass = measured >= bound;
        self.checks.push(CheckResult {
            check: check.into(),
            status: if pass { "pass" } else { "fail" }.into(),
            residual: measured,
            tolerance: bound,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    /// Fill the overall field from the recorded checks.
    pub fn finalize(mut self) -> Self {
        self.overall = if self.all_pass() { "pass" } else { "fail" }.into();
        self
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,status,residual,tolerance\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{:.16e},{:.16e}\n",
                c.check, c.status, c.residual, c.tolerance
            ));
        }
        out.push_str(&format!("overall,{},,\n", self.overall));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
