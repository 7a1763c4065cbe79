//! Check outcomes and verification reports.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Result of one named check. A failing check always carries a
/// counterexample in serialized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    /// Number of cases the check looked at.
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn pass(name: impl Into<String>, cases: u64) -> Self {
        CheckOutcome {
            name: name.into(),
            status: Status::Pass,
            cases,
            counterexample: None,
            note: None,
        }
    }

    pub fn fail(name: impl Into<String>, cases: u64, counterexample: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status: Status::Fail,
            cases,
            counterexample: Some(counterexample.into()),
            note: None,
        }
    }

    pub fn skipped(name: impl Into<String>, note: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            status: Status::Skipped,
            cases: 0,
            counterexample: None,
            note: Some(note.into()),
        }
    }

    /// Builds a pass or a fail depending on whether a counterexample was found.
    pub fn from_search(name: impl Into<String>, cases: u64, found: Option<String>) -> Self {
        match found {
            None => CheckOutcome::pass(name, cases),
            Some(c) => CheckOutcome::fail(name, cases, c),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Outcome of a full verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub instance: String,
    pub generators: String,
    pub seed: u64,
    /// Sorted by name.
    pub checks: Vec<CheckOutcome>,
    /// Wall-clock time; excluded from determinism comparisons.
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Plain-text rendering, one line per check.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "instance: {}\ngenerators: {}\nseed: {}\n",
            self.instance, self.generators, self.seed
        );
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("[{tag}] {} ({} cases)", c.name, c.cases));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!(" counterexample: {ce}"));
            }
            if let Some(note) = &c.note {
                out.push_str(&format!(" note: {note}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("elapsed: {} ms\n", self.elapsed_ms));
        out
    }
}
