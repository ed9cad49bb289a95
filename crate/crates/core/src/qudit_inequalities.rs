//! The inequality battery for single-qudit density matrices: subadditivity,
//! Araki–Lieb, strong subadditivity under a three-factor labeling, the
//! observable relative-entropy inequality, and the energy–entropy bound
//! `E + S <= ln Tr e^h`.
//!
//! All margins follow the report convention `margin = rhs - lhs >= 0`.

use crate::error::{Error, Result};
use crate::index_maps::{matrix_partial_contraction, LabelingScheme};
use crate::matfun::{self, HermitianMatrix, EIG_CUTOFF, STATE_TOL};
use crate::report::{InequalityReport, RelEntropy};

/// Margin tolerance for strong subadditivity; looser than the bipartite
/// checks because it accumulates four spectral computations on dim-8 input.
pub const SSA_TOL: f64 = 1e-9;

fn expect_state(rho: &HermitianMatrix, scheme: &LabelingScheme) -> Result<()> {
    if scheme.total() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: scheme.total(),
            actual: rho.dim(),
        });
    }
    rho.validate_state()
}

/// Subadditivity under a two-factor labeling:
/// `S(rho) <= S(rho(1)) + S(rho(2))`.
pub fn qudit_subadditivity(
    rho: &HermitianMatrix,
    scheme: &LabelingScheme,
) -> Result<InequalityReport> {
    if scheme.factors().len() != 2 {
        return Err(Error::BadAxes {
            axes: vec![],
            nfactors: scheme.factors().len(),
        });
    }
    expect_state(rho, scheme)?;
    let s = matfun::matrix_entropy(rho)?;
    let s1 = matfun::matrix_entropy(&matrix_partial_contraction(rho, scheme, &[0])?)?;
    let s2 = matfun::matrix_entropy(&matrix_partial_contraction(rho, scheme, &[1])?)?;
    Ok(InequalityReport::new("subadditivity", s, s1 + s2, STATE_TOL)
        .with_param("factors", format!("{:?}", scheme.factors())))
}

/// Araki–Lieb: `|S(rho(1)) - S(rho(2))| <= S(rho)`.
pub fn araki_lieb(rho: &HermitianMatrix, scheme: &LabelingScheme) -> Result<InequalityReport> {
    if scheme.factors().len() != 2 {
        return Err(Error::BadAxes {
            axes: vec![],
            nfactors: scheme.factors().len(),
        });
    }
    expect_state(rho, scheme)?;
    let s = matfun::matrix_entropy(rho)?;
    let s1 = matfun::matrix_entropy(&matrix_partial_contraction(rho, scheme, &[0])?)?;
    let s2 = matfun::matrix_entropy(&matrix_partial_contraction(rho, scheme, &[1])?)?;
    Ok(InequalityReport::new("araki-lieb", (s1 - s2).abs(), s, STATE_TOL)
        .with_param("factors", format!("{:?}", scheme.factors())))
}

/// Strong subadditivity under a three-factor labeling:
/// `S(rho) + S(rho(2)) <= S(rho(12)) + S(rho(23))`.
pub fn strong_subadditivity(
    rho: &HermitianMatrix,
    scheme: &LabelingScheme,
) -> Result<InequalityReport> {
    if scheme.factors().len() != 3 {
        return Err(Error::BadAxes {
            axes: vec![],
            nfactors: scheme.factors().len(),
        });
    }
    expect_state(rho, scheme)?;
    let s = matfun::matrix_entropy(rho)?;
    let s12 = matfun::matrix_entropy(&matrix_partial_contraction(rho, scheme, &[0, 1])?)?;
    let s23 = matfun::matrix_entropy(&matrix_partial_contraction(rho, scheme, &[1, 2])?)?;
    let s2 = matfun::matrix_entropy(&matrix_partial_contraction(rho, scheme, &[1])?)?;
    Ok(InequalityReport::new("strong-subadditivity", s + s2, s12 + s23, SSA_TOL)
        .with_param("factors", format!("{:?}", scheme.factors())))
}

/// Default shift policy for [`observable_state_inequality`]: twice the
/// magnitude of the contracted observable's lowest eigenvalue, plus one.
pub fn default_observable_shift(f: &HermitianMatrix, scheme: &LabelingScheme) -> Result<f64> {
    let f1 = matrix_partial_contraction(f, scheme, &[0])?;
    Ok(2.0 * f1.min_eigenvalue()?.abs() + 1.0)
}

/// Relative-entropy inequality between the first marginal of a state and the
/// shifted, normalized first marginal of an observable:
/// `D(rho(1) || (Tr f + m x)^-1 (f(1) + x I)) >= 0`.
pub fn observable_state_inequality(
    rho: &HermitianMatrix,
    f: &HermitianMatrix,
    x: f64,
    scheme: &LabelingScheme,
) -> Result<InequalityReport> {
    if scheme.factors().len() != 2 {
        return Err(Error::BadAxes {
            axes: vec![],
            nfactors: scheme.factors().len(),
        });
    }
    expect_state(rho, scheme)?;
    if f.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: f.dim(),
        });
    }
    let m = scheme.factors()[0] as f64;
    let rho1 = matrix_partial_contraction(rho, scheme, &[0])?;
    let f1 = matrix_partial_contraction(f, scheme, &[0])?;
    let floor = f1.min_eigenvalue()?;
    if floor + x <= EIG_CUTOFF {
        return Err(Error::ShiftBelowFloor {
            given: x,
            required: -floor,
        });
    }
    let denom = f.trace() + m * x;
    if denom <= 0.0 {
        return Err(Error::DegenerateNormalization { denom });
    }
    let sigma = f1.shifted(x).scaled(1.0 / denom);
    let report = match matfun::quantum_relative_entropy(&rho1, &sigma)? {
        RelEntropy::Finite(d) => {
            InequalityReport::new("observable-relative-entropy", 0.0, d, STATE_TOL)
        }
        RelEntropy::Saturated => InequalityReport::saturated("observable-relative-entropy", 0.0, STATE_TOL),
    };
    Ok(report.with_param("x", x))
}

/// Energy–entropy bound `Tr(rho h) + S(rho) <= ln Tr e^h`, with equality at
/// the normalized exponential of `h`.
pub fn energy_entropy_bound(rho: &HermitianMatrix, h: &HermitianMatrix) -> Result<InequalityReport> {
    if rho.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: h.dim(),
        });
    }
    rho.validate_state()?;
    let energy = (rho.as_matrix() * h.as_matrix()).trace().re;
    let entropy = matfun::matrix_entropy(rho)?;
    let ln_z = matfun::matrix_exp_trace(h)?;
    Ok(InequalityReport::new("energy-entropy-bound", energy + entropy, ln_z, STATE_TOL))
}
