//! Result value types shared by the inequality checkers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Default tolerance for "margin is nonnegative" verdicts.
pub const DEFAULT_MARGIN_TOL: f64 = 1e-10;

/// A relative-entropy value. Divergences are infinite whenever the first
/// argument has weight outside the support of the second; that case is kept
/// as a distinguished variant so reports never carry floating-point `inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RelEntropy {
    Finite(f64),
    Saturated,
}

impl RelEntropy {
    pub fn is_saturated(&self) -> bool {
        matches!(self, RelEntropy::Saturated)
    }

    pub fn finite(&self) -> Option<f64> {
        match *self {
            RelEntropy::Finite(v) => Some(v),
            RelEntropy::Saturated => None,
        }
    }
}

/// Outcome of one inequality evaluation, written so that the inequality reads
/// `lhs <= rhs`; the margin is always `rhs - lhs` and the check passes when
/// the margin clears `-tol`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InequalityReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
    pub parameters: BTreeMap<String, String>,
}

impl InequalityReport {
    pub fn new(name: &str, lhs: f64, rhs: f64, tol: f64) -> Self {
        let margin = rhs - lhs;
        let mut parameters = BTreeMap::new();
        parameters.insert("tol".to_string(), format!("{tol:e}"));
        Self {
            name: name.to_string(),
            lhs,
            rhs,
            margin,
            pass: margin >= -tol,
            parameters,
        }
    }

    /// Report a saturated (infinite) right-hand side: trivially satisfied,
    /// with `f64::MAX` standing in for the unrepresentable value.
    pub fn saturated(name: &str, lhs: f64, tol: f64) -> Self {
        let mut r = Self::new(name, lhs, f64::MAX, tol);
        r.margin = f64::MAX;
        r.pass = true;
        r.parameters.insert("saturated".to_string(), "true".to_string());
        r
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}
