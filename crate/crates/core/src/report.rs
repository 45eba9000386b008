//! Verification reports: named checks with the dimensions they compared.

use serde::{Deserialize, Serialize};

use crate::linalg::Subspace;

/// One checked identity. For span equalities `expected` and `computed` are the
/// ranks of the two sides; for predicates they are `1` for true and `0` for false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: usize,
    pub computed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub fixture: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(theorem: impl Into<String>, fixture: impl Into<String>) -> VerificationReport {
        VerificationReport { theorem: theorem.into(), fixture: fixture.into(), checks: Vec::new(), pass: true }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    /// Records `computed == expected` as subspaces.
    pub fn span_eq(&mut self, name: impl Into<String>, computed: &Subspace, expected: &Subspace) -> bool {
        let pass = computed == expected;
        self.push(Check { name: name.into(), expected: expected.rank(), computed: computed.rank(), pass });
        pass
    }

    /// Records `small ⊆ big`.
    pub fn span_le(&mut self, name: impl Into<String>, small: &Subspace, big: &Subspace) -> bool {
        let pass = small.is_subspace_of(big);
        self.push(Check { name: name.into(), expected: big.rank(), computed: small.rank(), pass });
        pass
    }

    pub fn holds(&mut self, name: impl Into<String>, pass: bool) -> bool {
        self.push(Check { name: name.into(), expected: 1, computed: usize::from(pass), pass });
        pass
    }

    pub fn dim_eq(&mut self, name: impl Into<String>, computed: usize, expected: usize) -> bool {
        let pass = computed == expected;
        self.push(Check { name: name.into(), expected, computed, pass });
        pass
    }

    /// Folds another report's checks in, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}/{}", c.name);
            }
            self.push(c);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }

    /// `Ok(self)` when every check passed, otherwise `VerificationFailed` naming the first failure.
    pub fn into_result(self) -> crate::Result<VerificationReport> {
        match self.first_failure() {
            None => Ok(self),
            Some(c) => Err(crate::Error::VerificationFailed(format!(
                "{}: {} (expected {}, computed {})",
                self.theorem, c.name, c.expected, c.computed
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    #[test]
    fn overall_tracks_checks() {
        let q = Field::Rationals;
        let mut r = VerificationReport::new("t", "f");
        assert!(r.span_eq("same", &Subspace::full(2, q), &Subspace::full(2, q)));
        assert!(r.pass);
        assert!(!r.span_eq("differ", &Subspace::zero(2, q), &Subspace::full(2, q)));
        assert!(!r.pass);
        assert_eq!(r.first_failure().unwrap().name, "differ");
        assert!(r.into_result().is_err());
    }
}
