//! Pass/fail reports shared by the checkers and the command line.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    /// 1-based word of the element the check is about (empty for `e` or
    /// checks that are not attached to one element).
    pub w: Vec<usize>,
    pub passed: bool,
    /// Number of individual relations evaluated.
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Report {
    pub fn new(check: &str, w: Vec<usize>) -> Self {
        Self { check: check.to_string(), w, passed: true, checked: 0, violations: Vec::new() }
    }

    /// Records one evaluated relation; `detail` is only built on failure.
    pub fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.violations.push(detail());
        }
    }

    /// Folds another report of the same check into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.passed &= other.passed;
        self.violations.extend(other.violations);
    }
}
