//! Outcome of checking an identity over a range of indices.

use std::fmt;

use crate::laurent::LaurentPoly;

/// One failed instance: the two sides that should have been equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Index of the failing instance; `None` for index-free identities.
    pub n: Option<u32>,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<Mismatch>,
    /// Instances that could not be computed at all.
    pub errors: Vec<String>,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>) -> Self {
        IdentityReport { name: name.into(), checked: 0, failures: Vec::new(), errors: Vec::new() }
    }

    /// Records one instance, comparing `lhs` and `rhs` exactly.
    pub fn check(&mut self, n: u32, lhs: LaurentPoly, rhs: LaurentPoly) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Mismatch { n: Some(n), lhs, rhs });
        }
    }

    /// Records an identity that does not depend on an index.
    pub fn check_identity(&mut self, lhs: LaurentPoly, rhs: LaurentPoly) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Mismatch { n: None, lhs, rhs });
        }
    }

    pub fn error(&mut self, n: Option<u32>, msg: impl std::fmt::Display) {
        self.checked += 1;
        match n {
            Some(n) => self.errors.push(format!("n={n}: {msg}")),
            None => self.errors.push(msg.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.errors.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Mismatch> {
        self.failures.first()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checked", self.name, self.checked)?;
        if !self.passed() {
            write!(f, ", {} failed", self.failures.len() + self.errors.len())?;
        }
        write!(f, ")")?;
        if let Some(m) = self.first_failure() {
            match m.n {
                Some(n) => write!(f, "\n  first counterexample at n={n}:")?,
                None => write!(f, "\n  counterexample:")?,
            }
            write!(f, "\n    lhs: {}\n    rhs: {}", m.lhs, m.rhs)?;
        }
        for e in &self.errors {
            write!(f, "\n  error: {e}")?;
        }
        Ok(())
    }
}
