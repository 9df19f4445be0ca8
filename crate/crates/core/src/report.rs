//! Line-oriented verification report: one `CHECK <name> PASS|FAIL
//! <observed> <expected>` per claim, in stable order.

use std::fmt;

/// A single named claim with its observed and expected values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub observed: String,
    pub expected: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        passed: bool,
        observed: impl Into<String>,
        expected: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            passed,
            observed: observed.into(),
            expected: expected.into(),
        }
    }

    /// Equality check on displayable values.
    pub fn compare<T: PartialEq + fmt::Display>(name: impl Into<String>, observed: T, expected: T) -> Self {
        let passed = observed == expected;
        Check::new(name, passed, observed.to_string(), expected.to_string())
    }

    /// A bare predicate; observed is `ok`/`violated`, expected is `ok`.
    pub fn bool(name: impl Into<String>, passed: bool) -> Self {
        Check::new(name, passed, if passed { "ok" } else { "violated" }, "ok")
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {} {} {}",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.observed,
            self.expected
        )
    }
}

/// True iff every check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
