//! Pass/fail records shared by the verification routines.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not decidable within the configured bounds; never counted as a pass.
    Skipped,
}

/// One named check with the data that witnesses its outcome.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub status: CheckStatus,
    pub witnesses: Vec<Value>,
}

impl Check {
    pub fn new(check: impl Into<String>, passed: bool, witnesses: Vec<Value>) -> Self {
        let status = if passed { CheckStatus::Pass } else { CheckStatus::Fail };
        Self { check: check.into(), status, witnesses }
    }

    pub fn skipped(check: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { check: check.into(), status: CheckStatus::Skipped, witnesses: vec![Value::String(reason.into())] }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}
