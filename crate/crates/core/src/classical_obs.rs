//! Classical observables treated as "classical states".
//!
//! A real function `f_j` on `N` outcomes becomes a probability distribution
//! `F_j = (f_j + x) n` with `n = (sum f + N x)^-1` once the shift `x` clears
//! the most negative value. Shannon and Tsallis entropies, relative entropy,
//! and the subadditivity condition then apply to observables verbatim.
//!
//! Shift admissibility matches the matrix lift: `x >= -min_j f_j - 1e-12`,
//! so nonnegative observables (and probability vectors, which reproduce
//! themselves at `x = 0`) are admitted unshifted.

use crate::error::{Error, Result};
use crate::index_maps::{prob_marginal, LabelingScheme, ProbabilityVector};
use crate::lift::SHIFT_TOL;
use crate::report::{InequalityReport, RelEntropy};

/// Probabilities below this contribute nothing to entropy sums (`0 ln 0 = 0`)
/// and count as zero support in relative entropies.
pub const PROB_CUTOFF: f64 = 1e-14;

/// Margin tolerance for the scalar inequality checks.
pub const SCALAR_TOL: f64 = 1e-12;

/// Real-valued observable on finitely many outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalObservable {
    values: Vec<f64>,
}

impl ClassicalObservable {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { row: i, col: 0 });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// `<f^k> = sum_j f_j^k P_j`.
pub fn moments(f: &ClassicalObservable, p: &ProbabilityVector, k: u32) -> Result<f64> {
    if f.len() != p.len() {
        return Err(Error::LengthMismatch(f.len(), p.len()));
    }
    if k == 0 {
        return Err(Error::Domain("moment order must be positive"));
    }
    Ok(f.values()
        .iter()
        .zip(p.probs())
        .map(|(&fj, &pj)| fj.powi(k as i32) * pj)
        .sum())
}

/// An observable shifted and normalized into a probability distribution.
#[derive(Debug, Clone)]
pub struct LiftedDistribution {
    probs: ProbabilityVector,
    x: f64,
    norm: f64,
}

impl LiftedDistribution {
    pub fn probs(&self) -> &ProbabilityVector {
        &self.probs
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// The normalization factor `(sum f + N x)^-1`.
    pub fn norm(&self) -> f64 {
        self.norm
    }
}

/// Smallest admissible shift for an observable.
pub fn minimum_observable_shift(f: &ClassicalObservable) -> f64 {
    (-f.min_value()).max(0.0)
}

/// Lift an observable to the distribution `F_j = (f_j + x) n`.
pub fn lift_observable(f: &ClassicalObservable, x: f64) -> Result<LiftedDistribution> {
    let required = minimum_observable_shift(f);
    if x < required - SHIFT_TOL {
        return Err(Error::ShiftBelowFloor { given: x, required });
    }
    let denom: f64 = f.values().iter().sum::<f64>() + f.len() as f64 * x;
    if denom <= 0.0 {
        return Err(Error::DegenerateNormalization { denom });
    }
    let norm = 1.0 / denom;
    let probs = ProbabilityVector::new(f.values().iter().map(|&fj| (fj + x) * norm).collect())?;
    Ok(LiftedDistribution { probs, x, norm })
}

/// Shannon entropy of a probability vector, in nats.
pub fn shannon_entropy(p: &ProbabilityVector) -> f64 {
    p.probs()
        .iter()
        .filter(|&&q| q > PROB_CUTOFF)
        .map(|&q| -q * q.ln())
        .sum()
}

/// Shannon entropy of the lifted observable.
pub fn shannon_of_observable(ld: &LiftedDistribution) -> f64 {
    shannon_entropy(ld.probs())
}

/// Tsallis q-entropy `(1 - q)^-1 (sum F_j^q - 1)` of the lifted observable;
/// approaches the Shannon entropy as `q -> 1`.
pub fn tsallis_of_observable(ld: &LiftedDistribution, q: f64) -> Result<f64> {
    if !q.is_finite() || (q - 1.0).abs() <= 1e-8 {
        return Err(Error::DeformationParameterNearOne { q });
    }
    let sum_q: f64 = ld
        .probs()
        .probs()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p.powf(q))
        .sum();
    Ok((sum_q - 1.0) / (1.0 - q))
}

/// Relative entropy `D(a || b) = sum_j a_j ln(a_j / b_j)`; saturated when
/// `a` has weight where `b` has none.
pub fn relative_entropy_distributions(
    a: &ProbabilityVector,
    b: &ProbabilityVector,
) -> Result<RelEntropy> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let mut d = 0.0;
    for (&aj, &bj) in a.probs().iter().zip(b.probs()) {
        if aj <= PROB_CUTOFF {
            continue;
        }
        if bj <= PROB_CUTOFF {
            return Ok(RelEntropy::Saturated);
        }
        d += aj * (aj / bj).ln();
    }
    Ok(RelEntropy::Finite(d))
}

/// Subadditivity of a probability vector under a two-factor labeling:
/// `H(P) <= H(marginal 1) + H(marginal 2)`.
pub fn distribution_subadditivity(
    p: &ProbabilityVector,
    scheme: &LabelingScheme,
) -> Result<InequalityReport> {
    if scheme.factors().len() != 2 {
        return Err(Error::BadAxes {
            axes: vec![],
            nfactors: scheme.factors().len(),
        });
    }
    let h = shannon_entropy(p);
    let h1 = shannon_entropy(&prob_marginal(p, scheme, &[0])?);
    let h2 = shannon_entropy(&prob_marginal(p, scheme, &[1])?);
    Ok(InequalityReport::new("subadditivity", h, h1 + h2, SCALAR_TOL))
}

/// Subadditivity for an observable: lift at shift `x`, then compare the
/// entropy of the lifted distribution with the entropies of its two
/// marginals. Under the (2, 2) labeling of four outcomes the marginals are
/// `(F1 + F2, F3 + F4)` and `(F1 + F3, F2 + F4)`.
pub fn observable_subadditivity(
    f: &ClassicalObservable,
    x: f64,
    scheme: &LabelingScheme,
) -> Result<InequalityReport> {
    if scheme.total() != f.len() {
        return Err(Error::LengthMismatch(scheme.total(), f.len()));
    }
    let lifted = lift_observable(f, x)?;
    let report = distribution_subadditivity(lifted.probs(), scheme)?;
    Ok(
        InequalityReport::new("observable-subadditivity", report.lhs, report.rhs, SCALAR_TOL)
            .with_param("x", x),
    )
}
