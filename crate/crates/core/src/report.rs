//! Structured check records shared by the verification layers.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

impl Check {
    pub fn compare<T: fmt::Display + PartialEq>(check: &str, inputs: &str, expected: T, got: T) -> Check {
        let status = if expected == got { Status::Pass } else { Status::Fail };
        Check {
            check: check.into(),
            inputs: inputs.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            status,
        }
    }

    pub fn indeterminate(check: &str, inputs: &str, expected: &str, reason: &str) -> Check {
        Check {
            check: check.into(),
            inputs: inputs.into(),
            expected: expected.into(),
            got: reason.into(),
            status: Status::Indeterminate,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Indeterminate => "INDETERMINATE",
        };
        write!(f, "[{tag}] {} ({}): expected {}, got {}", self.check, self.inputs, self.expected, self.got)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}
