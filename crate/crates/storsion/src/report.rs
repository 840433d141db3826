//! Structured pass/fail reports emitted by the verification routines.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// A verification outcome: named checks, an overall verdict, and a list of
/// failure witnesses. Serializes to `{checks, passed, counterexamples}`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub passed: bool,
    pub counterexamples: Vec<String>,
}

impl VerifyReport {
    pub fn new() -> Self {
        VerifyReport {
            checks: Vec::new(),
            passed: true,
            counterexamples: Vec::new(),
        }
    }

    pub fn push(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
        });
        self.passed &= passed;
    }

    pub fn witness(&mut self, description: String) {
        self.counterexamples.push(description);
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

impl Default for VerifyReport {
    fn default() -> Self {
        Self::new()
    }
}
