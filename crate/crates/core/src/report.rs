// SPDX-License-Identifier: Apache-2.0

//! Check reports. A failed check is data, not an error.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::Rational;

/// One violated identity: which axiom, on which basis tuple, with which
/// residual (left side minus right side).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub residual: Vec<Rational>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn push(&mut self, axiom: &str, witness: Vec<usize>, residual: Vec<Rational>) {
        self.failures.push(Failure {
            axiom: axiom.to_string(),
            witness,
            residual,
        });
    }

    /// Records a failure if `residual` is not zero.
    pub fn check(&mut self, axiom: &str, witness: &[usize], residual: Vec<Rational>) {
        if residual.iter().any(|x| !x.is_zero()) {
            self.push(axiom, witness.to_vec(), residual);
        }
    }

    /// Records a failure without a residual when `ok` is false.
    pub fn require(&mut self, axiom: &str, ok: bool) {
        if !ok {
            self.push(axiom, Vec::new(), Vec::new());
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.failures.extend(other.failures);
    }

    /// Same report with every axiom id prefixed by `prefix`.
    pub fn prefixed(mut self, prefix: &str) -> Report {
        for f in &mut self.failures {
            f.axiom = format!("{prefix}{}", f.axiom);
        }
        self
    }

    pub fn failed_axioms(&self) -> BTreeSet<String> {
        self.failures.iter().map(|f| f.axiom.clone()).collect()
    }

    pub fn fails(&self, axiom: &str) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        writeln!(f, "{} failure(s):", self.failures.len())?;
        for x in &self.failures {
            writeln!(f, "  {} at {:?}: {:?}", x.axiom, x.witness, x.residual)?;
        }
        Ok(())
    }
}
