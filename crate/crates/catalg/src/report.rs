//! Check reports: per-axiom pass/fail with witnesses and sweep counts.

use serde::Serialize;
use std::fmt;

/// Outcome of one named check inside a suite. Failures carry a minimal
/// witness (the offending tuple and the two unequal composites, rendered as
/// text).
#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    /// Number of tuples/maps actually swept.
    pub checked: u64,
    pub witness: Option<String>,
    /// Marks axioms that are derivable from others but still checked.
    pub derivable: bool,
}

impl CheckItem {
    pub fn pass(name: impl Into<String>, checked: u64) -> Self {
        CheckItem {
            name: name.into(),
            passed: true,
            checked,
            witness: None,
            derivable: false,
        }
    }

    pub fn fail(name: impl Into<String>, checked: u64, witness: impl Into<String>) -> Self {
        CheckItem {
            name: name.into(),
            passed: false,
            checked,
            witness: Some(witness.into()),
            derivable: false,
        }
    }

    pub fn derivable(mut self) -> Self {
        self.derivable = true;
        self
    }
}

/// A list of check items produced by one suite run.
#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    /// First failing item, if any.
    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.passed)
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let tag = if item.passed { "ok" } else { "FAIL" };
            let derl = if item.derivable { " [derivable]" } else { "" };
            write!(f, "{:<58} {} ({}){}", item.name, tag, item.checked, derl)?;
            if let Some(w) = &item.witness {
                write!(f, "\n    witness: {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
