//! Machine-readable verification reports.

use crate::error::Result;
use serde::Serialize;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One check's outcome.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub status: CheckStatus,
    pub measured: Option<f64>,
    pub tolerance: Option<f64>,
    pub seconds: f64,
}

impl CheckRecord {
    /// Render as one human-readable line.
    pub fn summary_line(&self) -> String {
        match self.status {
            CheckStatus::Skipped => format!("[skip] {}", self.check),
            _ => format!(
                "[{}] {} measured={:.3e} tol={:.3e} ({:.3}s)",
                match self.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => unreachable!(),
                },
                self.check,
                self.measured.unwrap_or(f64::NAN),
                self.tolerance.unwrap_or(f64::NAN),
                self.seconds
            ),
        }
    }
}

/// Ordered collection of check outcomes; serializes as a JSON array.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn any_failed(&self) -> bool {
        self.records
            .iter()
            .any(|r| r.status == CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.records).expect("report serializes")
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}
