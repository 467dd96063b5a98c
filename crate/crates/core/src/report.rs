//! Named pass/fail checks shared by the demo pipelines and the acceptance suite.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The statement the check witnesses.
    pub anchor: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        pass: bool,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            pass,
            detail: detail.into(),
        }
    }

    /// `PASS id: detail` or `FAIL id: detail`.
    pub fn line(&self) -> String {
        format!(
            "{} {}: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.detail
        )
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
