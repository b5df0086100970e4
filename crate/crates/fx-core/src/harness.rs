//! The reusable check harness: enumeration budgets and structured reports.
//!
//! Every law suite in the crate produces a [`LawReport`]: a list of named
//! checks, each with the number of cases evaluated and up to
//! [`MAX_COUNTEREXAMPLES`] recorded counterexamples. Failures are collected,
//! never thrown, so a single run diagnoses as much as possible.

use std::fmt::Display;

use crate::universe::Value;

/// How many counterexamples a single check records before it stops
/// describing new ones (it keeps counting cases either way).
pub const MAX_COUNTEREXAMPLES: usize = 5;

/// Enumeration and sampling budget shared by all suites.
///
/// Spaces at or below the caps are enumerated exhaustively; larger spaces
/// fall back to `samples` values drawn from a ChaCha stream seeded with
/// `seed`, so reports are identical across runs.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Full-enumeration cap for function spaces.
    pub fn_cap: u64,
    /// Full-enumeration cap for value spaces.
    pub value_cap: u64,
    /// Sample count used when a space exceeds its cap.
    pub samples: u64,
    /// Seed for all deterministic sampling.
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            fn_cap: 256,
            value_cap: 10_000,
            samples: 64,
            seed: 42,
        }
    }
}

impl Budget {
    /// Same budget, different seed.
    pub fn with_seed(self, seed: u64) -> Self {
        Budget { seed, ..self }
    }

    /// Same budget, different sample count.
    pub fn with_samples(self, samples: u64) -> Self {
        Budget { samples, ..self }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    /// Check name, unique within its suite.
    pub name: String,
    /// Stable slug tying the check to the diagram or axiom it evaluates.
    pub anchor: String,
    /// Number of cases evaluated. Always positive for a well-formed suite.
    pub cases: u64,
    /// Descriptions of failing cases, at most [`MAX_COUNTEREXAMPLES`].
    pub counterexamples: Vec<String>,
    failures: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Total number of failing cases, including ones past the recording cap.
    pub fn failures(&self) -> u64 {
        self.failures
    }
}

/// Builder for a [`CheckResult`]; feed it cases, then [`Check::finish`].
pub struct Check {
    name: String,
    anchor: String,
    cases: u64,
    counterexamples: Vec<String>,
    failures: u64,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            cases: 0,
            counterexamples: Vec::new(),
            failures: 0,
        }
    }

    /// Record one case that holds iff `ok`.
    pub fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(describe());
            }
        }
    }

    /// Record one case comparing two values for structural equality.
    pub fn case_eq(&mut self, lhs: &Value, rhs: &Value, context: impl FnOnce() -> String) {
        self.case(lhs == rhs, || {
            format!("{}: lhs = {lhs}, rhs = {rhs}", context())
        });
    }

    pub fn finish(self) -> CheckResult {
        debug_assert!(self.cases > 0, "check `{}` evaluated no cases", self.name);
        CheckResult {
            name: self.name,
            anchor: self.anchor,
            cases: self.cases,
            counterexamples: self.counterexamples,
            failures: self.failures,
        }
    }
}

/// Result of one law suite: a list of named checks.
#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl LawReport {
    pub fn new(suite: impl Into<String>) -> Self {
        LawReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    /// True iff every check has zero counterexamples.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    /// Absorb another report, prefixing its check names.
    pub fn absorb(&mut self, prefix: impl Display, other: LawReport) {
        for mut check in other.checks {
            check.name = format!("{prefix}/{}", check.name);
            self.checks.push(check);
        }
    }

    /// Names of all failing checks, in order.
    pub fn failing(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn total_cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }
}
