//! Spin-j tomography: rotation unitaries parametrized by a direction on the
//! sphere, tomograms of states and observables (the diagonal of `u m u†`),
//! and the tomographic relative-entropy inequality.
//!
//! The rotation convention is the Euler-style `u = exp(-i phi Jz) exp(-i
//! theta Jy)`. Any other convention permutes tomogram values pointwise but
//! cannot change the sign of the inequality margins.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::classical_obs::{
    lift_observable, relative_entropy_distributions, ClassicalObservable,
};
use crate::error::{Error, Result};
use crate::index_maps::ProbabilityVector;
use crate::matfun::{self, HermitianMatrix, STATE_TOL};
use crate::report::{InequalityReport, RelEntropy};

/// Spin quantum number, stored as twice its value so that half-integers are
/// exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Spin {
    two_j: u32,
}

impl Spin {
    /// Validate a half-integer spin given as a float.
    pub fn new(j: f64) -> Result<Self> {
        let two_j = 2.0 * j;
        if !(j.is_finite() && j >= 0.0 && (two_j - two_j.round()).abs() < 1e-9) {
            return Err(Error::InvalidSpin { j });
        }
        Ok(Self {
            two_j: two_j.round() as u32,
        })
    }

    pub fn from_two_j(two_j: u32) -> Self {
        Self { two_j }
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    /// Hilbert-space dimension `2j + 1`.
    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    /// Magnetic quantum number of basis row `a`, ordered `j, j-1, ..., -j`.
    fn m(&self, a: usize) -> f64 {
        self.j() - a as f64
    }
}

/// Direction on the sphere: polar angle in `[0, pi]`, azimuth in `[0, 2 pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationAxis {
    pub theta: f64,
    pub phi: f64,
}

impl RotationAxis {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(theta.is_finite() && (0.0..=std::f64::consts::PI).contains(&theta)) {
            return Err(Error::AngleOutOfRange {
                name: "theta",
                value: theta,
                range: "[0, pi]",
            });
        }
        if !(phi.is_finite() && (0.0..2.0 * std::f64::consts::PI).contains(&phi)) {
            return Err(Error::AngleOutOfRange {
                name: "phi",
                value: phi,
                range: "[0, 2 pi)",
            });
        }
        Ok(Self { theta, phi })
    }
}

/// The standard spin-j generators `(Jx, Jy, Jz)` with `Jz` diagonal
/// `(j, j-1, ..., -j)` and ladder elements `sqrt(j(j+1) - m(m +- 1))`.
pub fn angular_momentum_matrices(spin: Spin) -> (HermitianMatrix, HermitianMatrix, HermitianMatrix) {
    let d = spin.dim();
    let j = spin.j();
    let jz = HermitianMatrix::from_fn(d, |a, b| {
        if a == b {
            Complex64::new(spin.m(a), 0.0)
        } else {
            Complex64::ZERO
        }
    })
    .expect("diagonal is Hermitian");

    // <m+1 | J+ | m> = sqrt(j(j+1) - m(m+1)) sits one row above the diagonal.
    let mut j_plus = DMatrix::<Complex64>::zeros(d, d);
    for a in 1..d {
        let m = spin.m(a);
        j_plus[(a - 1, a)] = Complex64::new((j * (j + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let j_minus = j_plus.adjoint();

    let jx = HermitianMatrix::new((&j_plus + &j_minus).scale(0.5)).expect("(J+ + J-)/2 is Hermitian");
    let jy = HermitianMatrix::new((&j_plus - &j_minus).map(|c| c * Complex64::new(0.0, -0.5)))
        .expect("(J+ - J-)/(2i) is Hermitian");
    (jx, jy, jz)
}

/// Rotation unitary `exp(-i phi Jz) exp(-i theta Jy)` for the given spin.
pub fn rotation_unitary(spin: Spin, axis: &RotationAxis) -> Result<DMatrix<Complex64>> {
    let (_, jy, jz) = angular_momentum_matrices(spin);
    let u_phi = matfun::unitary_exp(&jz, -axis.phi)?;
    let u_theta = matfun::unitary_exp(&jy, -axis.theta)?;
    Ok(u_phi * u_theta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TomogramKind {
    State,
    Observable,
}

/// Diagonal of `u m u†` at one measurement direction: a probability vector
/// for states, a real vector summing to `Tr m` for general observables.
#[derive(Debug, Clone)]
pub struct Tomogram {
    values: Vec<f64>,
    axis: RotationAxis,
    kind: TomogramKind,
}

impl Tomogram {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn axis(&self) -> &RotationAxis {
        &self.axis
    }

    pub fn kind(&self) -> TomogramKind {
        self.kind
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// View a state tomogram as a probability vector.
    pub fn as_probability(&self) -> Result<ProbabilityVector> {
        if self.kind != TomogramKind::State {
            return Err(Error::Domain("observable tomogram is not a distribution"));
        }
        ProbabilityVector::new(self.values.clone())
    }
}

/// Tomogram of a Hermitian matrix at one direction; the kind is inferred
/// from unit trace plus positivity of the matrix.
pub fn tomogram(mat: &HermitianMatrix, spin: Spin, axis: &RotationAxis) -> Result<Tomogram> {
    if mat.dim() != spin.dim() {
        return Err(Error::DimensionMismatch {
            expected: spin.dim(),
            actual: mat.dim(),
        });
    }
    let u = rotation_unitary(spin, axis)?;
    let rotated = mat.conjugated_by(&u)?;
    let values: Vec<f64> = (0..mat.dim()).map(|a| rotated.entry(a, a).re).collect();

    let is_state =
        (mat.trace() - 1.0).abs() <= STATE_TOL && mat.min_eigenvalue()? >= -STATE_TOL;
    let kind = if is_state {
        TomogramKind::State
    } else {
        TomogramKind::Observable
    };
    if kind == TomogramKind::State {
        // Unitary conjugation keeps a state's diagonal inside [0, 1].
        for &v in &values {
            if !(-1e-12..=1.0 + 1e-12).contains(&v) {
                return Err(Error::Domain("state tomogram value outside [0, 1]"));
            }
        }
    }
    let sum: f64 = values.iter().sum();
    if (sum - mat.trace()).abs() > STATE_TOL {
        return Err(Error::Domain("tomogram values do not sum to the trace"));
    }
    Ok(Tomogram {
        values,
        axis: *axis,
        kind,
    })
}

/// Tomographic relative-entropy inequality at one direction: the classical
/// relative entropy between the state tomogram and the shifted, per-axis
/// normalized observable tomogram is nonnegative,
/// `D(w_rho || (w_f + x) / sum_m (w_f(m) + x)) >= 0`.
///
/// Shares the lift and divergence code paths with [`crate::classical_obs`],
/// so this is literally the classical inequality applied to tomographic
/// symbols.
pub fn tomographic_relative_entropy(
    rho: &HermitianMatrix,
    f: &HermitianMatrix,
    spin: Spin,
    axis: &RotationAxis,
    x: f64,
) -> Result<InequalityReport> {
    rho.validate_state()?;
    let w_rho = tomogram(rho, spin, axis)?.as_probability()?;
    let w_f = tomogram(f, spin, axis)?;
    let lifted = lift_observable(&ClassicalObservable::new(w_f.values().to_vec())?, x)?;
    let report = match relative_entropy_distributions(&w_rho, lifted.probs())? {
        RelEntropy::Finite(d) => {
            InequalityReport::new("tomographic-relative-entropy", 0.0, d, STATE_TOL)
        }
        RelEntropy::Saturated => {
            InequalityReport::saturated("tomographic-relative-entropy", 0.0, STATE_TOL)
        }
    };
    Ok(report
        .with_param("x", x)
        .with_param("theta", axis.theta)
        .with_param("phi", axis.phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn spin_half_generators_are_half_paulis() {
        let (jx, _, jz) = angular_momentum_matrices(Spin::new(0.5).unwrap());
        assert!((jz.entry(0, 0).re - 0.5).abs() < 1e-15);
        assert!((jz.entry(1, 1).re + 0.5).abs() < 1e-15);
        assert!((jx.entry(0, 1).re - 0.5).abs() < 1e-15);
        assert!(jx.entry(0, 0).norm() < 1e-15);
    }

    #[test]
    fn spin_three_half_jz_diagonal() {
        let (_, _, jz) = angular_momentum_matrices(Spin::new(1.5).unwrap());
        let expected = [1.5, 0.5, -0.5, -1.5];
        for (a, &e) in expected.iter().enumerate() {
            assert!((jz.entry(a, a).re - e).abs() < 1e-15);
        }
    }

    #[test]
    fn commutator_identity_spin_one() {
        let (jx, jy, jz) = angular_momentum_matrices(Spin::new(1.0).unwrap());
        let comm = jx.as_matrix() * jy.as_matrix() - jy.as_matrix() * jx.as_matrix();
        let expected = jz.as_matrix().map(|c| c * Complex64::new(0.0, 1.0));
        assert!((comm - expected).norm() < 1e-12);
    }

    #[test]
    fn zero_angles_give_identity() {
        let spin = Spin::new(1.5).unwrap();
        let axis = RotationAxis::new(0.0, 0.0).unwrap();
        let u = rotation_unitary(spin, &axis).unwrap();
        let residual = (&u - DMatrix::<Complex64>::identity(4, 4)).norm();
        assert!(residual < 1e-12);
    }

    #[test]
    fn spin_half_pi_rotation_is_full_flip() {
        let spin = Spin::new(0.5).unwrap();
        let axis = RotationAxis::new(PI, 0.0).unwrap();
        let u = rotation_unitary(spin, &axis).unwrap();
        assert!((u[(0, 1)].norm() - 1.0).abs() < 1e-12);
        assert!(u[(0, 0)].norm() < 1e-12);
    }

    #[test]
    fn rotation_is_unitary() {
        let spin = Spin::new(1.5).unwrap();
        let axis = RotationAxis::new(1.1, 2.3).unwrap();
        let u = rotation_unitary(spin, &axis).unwrap();
        let residual = (u.adjoint() * &u - DMatrix::<Complex64>::identity(4, 4)).norm();
        assert!(residual < 1e-12);
    }

    #[test]
    fn maximally_mixed_tomogram_is_uniform() {
        let spin = Spin::new(1.5).unwrap();
        let rho = HermitianMatrix::identity(4).scaled(0.25);
        let axis = RotationAxis::new(0.9, 4.2).unwrap();
        let t = tomogram(&rho, spin, &axis).unwrap();
        assert_eq!(t.kind(), TomogramKind::State);
        for &v in t.values() {
            assert!((v - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn theta_zero_leaves_diagonal_unchanged() {
        let spin = Spin::new(1.5).unwrap();
        let mat = HermitianMatrix::from_real_diagonal(&[0.4, 0.3, 0.2, 0.1]);
        let axis = RotationAxis::new(0.0, 1.0).unwrap();
        let t = tomogram(&mat, spin, &axis).unwrap();
        let expected = [0.4, 0.3, 0.2, 0.1];
        for (v, e) in t.values().iter().zip(expected) {
            assert!((v - e).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_observable_relative_entropy_is_ln4_minus_entropy() {
        let spin = Spin::new(1.5).unwrap();
        let axis = RotationAxis::new(0.7, 0.4).unwrap();
        let rho = HermitianMatrix::from_real_diagonal(&[0.7, 0.3, 0.0, 0.0]);
        let f = HermitianMatrix::identity(4);
        let r = tomographic_relative_entropy(&rho, &f, spin, &axis, 0.0).unwrap();
        let w = tomogram(&rho, spin, &axis).unwrap().as_probability().unwrap();
        let expected = 4f64.ln() - crate::classical_obs::shannon_entropy(&w);
        assert!((r.margin - expected).abs() < 1e-12);
        assert!(r.pass);
    }

    #[test]
    fn invalid_spin_and_angles_are_rejected() {
        assert!(Spin::new(0.7).is_err());
        assert!(Spin::new(-0.5).is_err());
        assert!(RotationAxis::new(-0.1, 0.0).is_err());
        assert!(RotationAxis::new(0.0, 7.0).is_err());
    }
}
