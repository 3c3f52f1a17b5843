use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The family has no instances for these parameters.
    Vacuous,
    /// The check cannot run for these parameters (e.g. `m = n`).
    Unsupported,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub tag: String,
    pub status: Status,
    /// For failures: the largest offending entry. Empty otherwise.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// An ordered list of checks; ordering is deterministic so two runs with
/// the same inputs serialise identically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, suite: &str, name: impl Into<String>, tag: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.checks.push(Check { suite: suite.into(), name: name.into(), tag: tag.into(), status, detail: detail.into() });
    }

    /// Records an exact identity check: passes iff `ok`.
    pub fn check(&mut self, suite: &str, name: impl Into<String>, tag: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let (status, detail) = if ok { (Status::Pass, String::new()) } else { (Status::Fail, detail()) };
        self.push(suite, name, tag, status, detail);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    /// No failures. Vacuous and unsupported entries do not count against.
    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl fmt::Display for Report {
    /// Aligned table followed by a one-line summary; an empty report is
    /// just `OK (0 checks)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.checks.is_empty() {
            return f.write_str("OK (0 checks)");
        }
        let w_suite = self.checks.iter().map(|c| c.suite.len()).max().unwrap_or(0);
        let w_name = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let st = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Vacuous => "vacuous",
                Status::Unsupported => "unsupported",
            };
            write!(f, "{:<w_suite$}  {:<w_name$}  {st}", c.suite, c.name)?;
            if !c.detail.is_empty() {
                write!(f, "  [{}] {}", c.tag, c.detail)?;
            }
            writeln!(f)?;
        }
        let n = self.checks.len();
        let fails = self.count(Status::Fail);
        if fails == 0 {
            write!(f, "OK ({n} checks")?;
        } else {
            write!(f, "FAILED ({fails} of {n} checks")?;
        }
        let vac = self.count(Status::Vacuous);
        let uns = self.count(Status::Unsupported);
        if vac > 0 {
            write!(f, ", {vac} vacuous")?;
        }
        if uns > 0 {
            write!(f, ", {uns} unsupported")?;
        }
        f.write_str(")")
    }
}
