//! Pass/fail reports for exhaustive identity checks on basis tuples.

use serde::Serialize;

use crate::linalg::{is_zero_vector, Rational};

/// A basis tuple (1-based) on which an identity fails, with the exact
/// residual vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub indices: Vec<usize>,
    #[serde(serialize_with = "crate::io::serialize_rational_vec")]
    pub residual: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    /// Number of basis tuples evaluated.
    pub tuples_checked: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub(crate) fn new(check: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            tuples_checked: 0,
            violations: Vec::new(),
        }
    }

    /// Records one evaluated tuple. `zero_based` indices are shifted to the
    /// printed 1-based convention.
    pub(crate) fn record(&mut self, zero_based: &[usize], residual: Vec<Rational>) {
        self.tuples_checked += 1;
        if !is_zero_vector(&residual) {
            self.violations.push(Violation {
                indices: zero_based.iter().map(|i| i + 1).collect(),
                residual,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Lexicographically smallest failing tuple.
    pub fn witness(&self) -> Option<&Violation> {
        self.violations
            .iter()
            .min_by(|a, b| a.indices.cmp(&b.indices))
    }
}
