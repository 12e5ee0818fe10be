use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Result of checking one statement on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Every asserted relation holds.
    Verified,
    /// The statement does not apply to this instance.
    PremiseNotMet(String),
    /// An existential claim found no witness in the sampled values. Not a
    /// failure.
    Inconclusive(String),
    /// A proved relation failed: an implementation bug or a counterexample.
    Violation(String),
}

impl Outcome {
    pub fn is_violation(&self) -> bool {
        matches!(self, Outcome::Violation(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Verified => "verified",
            Outcome::PremiseNotMet(_) => "premise-not-met",
            Outcome::Inconclusive(_) => "inconclusive",
            Outcome::Violation(_) => "violation",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Outcome::Verified => None,
            Outcome::PremiseNotMet(s) | Outcome::Inconclusive(s) | Outcome::Violation(s) => Some(s),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.detail() {
            None => f.write_str(self.label()),
            Some(d) => write!(f, "{}: {d}", self.label()),
        }
    }
}

/// Collects failed assertions into a single outcome.
#[derive(Default)]
pub(crate) struct Checks {
    failures: Vec<String>,
}

impl Checks {
    pub(crate) fn require(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        if !ok {
            self.failures.push(what());
        }
        ok
    }

    pub(crate) fn outcome(self) -> Outcome {
        if self.failures.is_empty() {
            Outcome::Verified
        } else {
            Outcome::Violation(self.failures.join("; "))
        }
    }
}
