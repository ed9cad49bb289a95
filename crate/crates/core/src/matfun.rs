//! Hermitian matrix algebra: eigendecomposition, spectral matrix functions,
//! and the entropy functionals built on them.
//!
//! Everything downstream (marginal inequalities, lifted states, tomograms)
//! reduces to spectra of Hermitian matrices, so this module owns the numeric
//! conventions:
//!
//! - natural logarithm throughout;
//! - `0 ln 0 = 0`: eigenvalues below [`EIG_CUTOFF`] contribute nothing;
//! - degenerate eigenvalues need no special handling because every exported
//!   quantity is a symmetric function of the spectrum.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::report::RelEntropy;

/// Absolute per-component tolerance for the Hermitian symmetry check.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Eigenvalues below this are treated as exactly zero in entropy sums and
/// positive-definiteness tests (double-precision spectral noise floor).
pub const EIG_CUTOFF: f64 = 1e-14;

/// Tolerance for state checks: trace normalization and the admissible
/// negative-eigenvalue floor.
pub const STATE_TOL: f64 = 1e-10;

/// Validated N x N Hermitian matrix with finite complex entries.
///
/// Construction symmetrizes the input, `(m + m†)/2`, after checking that the
/// asymmetry is below [`HERMITICITY_TOL`] per component, so stored matrices
/// are exactly Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: DMatrix<Complex64>,
}

impl HermitianMatrix {
    /// Validate and wrap a square complex matrix.
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = m.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::Empty);
        }
        for a in 0..rows {
            for b in 0..cols {
                let v = m[(a, b)];
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::NonFinite { row: a, col: b });
                }
            }
        }
        for a in 0..rows {
            for b in a..cols {
                let delta = (m[(a, b)] - m[(b, a)].conj()).norm();
                if delta > HERMITICITY_TOL {
                    return Err(Error::NotHermitian {
                        row: a,
                        col: b,
                        delta,
                    });
                }
            }
        }
        let sym = (&m + m.adjoint()).scale(0.5);
        Ok(Self { inner: sym })
    }

    /// Build from an entry function; the result must pass the Hermiticity check.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Complex64) -> Result<Self> {
        Self::new(DMatrix::from_fn(n, n, f))
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: DMatrix::identity(n, n),
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            inner: DMatrix::zeros(n, n),
        }
    }

    /// Diagonal matrix from real entries.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self {
            inner: DMatrix::from_fn(n, n, |a, b| {
                if a == b {
                    Complex64::new(diag[a], 0.0)
                } else {
                    Complex64::ZERO
                }
            }),
        }
    }

    /// Rank-one projector |psi><psi| from a (not necessarily normalized) vector.
    pub fn from_pure_state(psi: &[Complex64]) -> Result<Self> {
        if psi.is_empty() {
            return Err(Error::Empty);
        }
        let norm_sq: f64 = psi.iter().map(|c| c.norm_sqr()).sum();
        if norm_sq < 1e-300 {
            return Err(Error::Domain("zero-norm state vector"));
        }
        let n = psi.len();
        Ok(Self {
            inner: DMatrix::from_fn(n, n, |a, b| psi[a] * psi[b].conj() / norm_sq),
        })
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn entry(&self, a: usize, b: usize) -> Complex64 {
        self.inner[(a, b)]
    }

    /// Trace; real by Hermiticity.
    pub fn trace(&self) -> f64 {
        self.inner.trace().re
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.inner
    }

    /// `self + x * I`.
    pub fn shifted(&self, x: f64) -> Self {
        let n = self.dim();
        let mut m = self.inner.clone();
        for a in 0..n {
            m[(a, a)] += Complex64::new(x, 0.0);
        }
        Self { inner: m }
    }

    /// `c * self` for real c.
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            inner: self.inner.scale(c),
        }
    }

    /// `u self u†` for a square matrix `u` of matching dimension.
    pub fn conjugated_by(&self, u: &DMatrix<Complex64>) -> Result<Self> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: u.nrows(),
            });
        }
        Self::new(u * &self.inner * u.adjoint())
    }

    /// Smallest eigenvalue.
    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(eigen_hermitian(self)?.eigenvalues()[0])
    }

    /// Check trace normalization and positivity within [`STATE_TOL`].
    pub fn validate_state(&self) -> Result<()> {
        let tr = self.trace();
        if (tr - 1.0).abs() > STATE_TOL {
            return Err(Error::Unnormalized { trace: tr });
        }
        let lambda_min = self.min_eigenvalue()?;
        if lambda_min < -STATE_TOL {
            return Err(Error::NotAState { value: lambda_min });
        }
        Ok(())
    }
}

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// the matching unitary of column eigenvectors.
///
/// The decomposition is deterministic for a fixed input; each eigenvector is
/// rephased so that its first component of appreciable magnitude is real
/// positive.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<Complex64>,
}

impl Spectrum {
    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> &[f64] {
        self.eigenvalues.as_slice()
    }

    /// Unitary matrix of column eigenvectors, ordered like the eigenvalues.
    pub fn eigenvectors(&self) -> &DMatrix<Complex64> {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `U diag(f(lambda)) U†` as a Hermitian matrix.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> HermitianMatrix {
        let m = self.apply_complex(|x| Complex64::new(f(x), 0.0));
        HermitianMatrix::new(m).expect("spectral function of a real map is Hermitian")
    }

    /// `U diag(f(lambda)) U†` for a complex-valued `f` (e.g. unitary phases).
    pub fn apply_complex(&self, f: impl Fn(f64) -> Complex64) -> DMatrix<Complex64> {
        let n = self.dim();
        let mut scaled = self.eigenvectors.clone();
        for j in 0..n {
            let fj = f(self.eigenvalues[j]);
            for a in 0..n {
                scaled[(a, j)] *= fj;
            }
        }
        scaled * self.eigenvectors.adjoint()
    }

    /// Reassemble `U diag(lambda) U†`.
    pub fn reconstructed(&self) -> DMatrix<Complex64> {
        self.apply_complex(|x| Complex64::new(x, 0.0))
    }
}

/// Eigendecomposition with ascending eigenvalues and a fixed phase convention.
///
/// Non-Hermitian inputs are rejected earlier, at [`HermitianMatrix`]
/// construction, with the offending index pair.
pub fn eigen_hermitian(m: &HermitianMatrix) -> Result<Spectrum> {
    let n = m.dim();
    let se = SymmetricEigen::try_new(m.inner.clone(), f64::EPSILON, 0).ok_or(Error::EigenFailed)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        se.eigenvalues[a]
            .partial_cmp(&se.eigenvalues[b])
            .expect("finite eigenvalues")
    });

    let eigenvalues = DVector::from_fn(n, |i, _| se.eigenvalues[order[i]]);
    let mut eigenvectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let col = se.eigenvectors.column(src);
        // Phase convention: first component with non-negligible magnitude is
        // made real positive, so the decomposition is reproducible.
        let pivot = (0..n).find(|&a| col[a].norm() > 1e-8).unwrap_or(0);
        let phase = col[pivot] / col[pivot].norm();
        let conj_phase = phase.conj();
        for a in 0..n {
            eigenvectors[(a, dst)] = col[a] * conj_phase;
        }
    }

    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Validated spectrum of a density matrix (trace 1, nonnegative within
/// [`STATE_TOL`]); clamps spectral noise below [`EIG_CUTOFF`] to zero.
fn state_eigenvalues(rho: &HermitianMatrix) -> Result<Vec<f64>> {
    let tr = rho.trace();
    if (tr - 1.0).abs() > STATE_TOL {
        return Err(Error::Unnormalized { trace: tr });
    }
    let spec = eigen_hermitian(rho)?;
    let lambda_min = spec.eigenvalues()[0];
    if lambda_min < -STATE_TOL {
        return Err(Error::NotAState { value: lambda_min });
    }
    Ok(spec
        .eigenvalues()
        .iter()
        .map(|&l| if l < EIG_CUTOFF { 0.0 } else { l })
        .collect())
}

/// Von Neumann entropy `S = -Tr rho ln rho` of a density matrix, in nats.
pub fn matrix_entropy(rho: &HermitianMatrix) -> Result<f64> {
    let mut s = 0.0;
    for l in state_eigenvalues(rho)? {
        if l > 0.0 {
            s -= l * l.ln();
        }
    }
    Ok(s)
}

/// Relative entropy `Tr rho (ln rho - ln sigma)` between density matrices.
///
/// `sigma` must be a unit-trace Hermitian matrix; if it has a (numerically)
/// zero eigenvalue carrying weight of `rho`, the divergence is infinite and
/// reported as [`RelEntropy::Saturated`] rather than a floating-point `inf`.
pub fn quantum_relative_entropy(rho: &HermitianMatrix, sigma: &HermitianMatrix) -> Result<RelEntropy> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: sigma.dim(),
        });
    }
    let tr_sigma = sigma.trace();
    if (tr_sigma - 1.0).abs() > STATE_TOL {
        return Err(Error::Unnormalized { trace: tr_sigma });
    }
    let p = state_eigenvalues(rho)?;
    let sigma_spec = eigen_hermitian(sigma)?;
    if sigma_spec.eigenvalues()[0] < -STATE_TOL {
        return Err(Error::NotAState {
            value: sigma_spec.eigenvalues()[0],
        });
    }

    // Support check: weight of rho on the null space of sigma.
    let n = rho.dim();
    for j in 0..n {
        if sigma_spec.eigenvalues()[j] < EIG_CUTOFF {
            let v = sigma_spec.eigenvectors().column(j);
            let mut mass = 0.0;
            for a in 0..n {
                for b in 0..n {
                    mass += (v[a].conj() * rho.entry(a, b) * v[b]).re;
                }
            }
            if mass > STATE_TOL {
                return Ok(RelEntropy::Saturated);
            }
        }
    }

    // Tr rho ln rho from the spectrum; Tr rho ln sigma via the spectral
    // logarithm restricted to the support of sigma.
    let tr_rho_ln_rho: f64 = p.iter().filter(|&&l| l > 0.0).map(|&l| l * l.ln()).sum();
    let ln_sigma = sigma_spec.apply(|l| if l > EIG_CUTOFF { l.ln() } else { 0.0 });
    let tr_rho_ln_sigma = (rho.as_matrix() * ln_sigma.as_matrix()).trace().re;
    Ok(RelEntropy::Finite(tr_rho_ln_rho - tr_rho_ln_sigma))
}

/// `ln Tr exp(h)`, evaluated with a max-shift so large spectra do not overflow.
pub fn matrix_exp_trace(h: &HermitianMatrix) -> Result<f64> {
    let spec = eigen_hermitian(h)?;
    let lambda_max = *spec
        .eigenvalues()
        .last()
        .expect("nonempty matrix has a spectrum");
    let sum: f64 = spec.eigenvalues().iter().map(|&l| (l - lambda_max).exp()).sum();
    Ok(lambda_max + sum.ln())
}

/// Normalized matrix exponential `exp(h) / Tr exp(h)` (a density matrix).
pub fn gibbs_state(h: &HermitianMatrix) -> Result<HermitianMatrix> {
    let spec = eigen_hermitian(h)?;
    let lambda_max = *spec.eigenvalues().last().expect("nonempty spectrum");
    let z_shifted: f64 = spec.eigenvalues().iter().map(|&l| (l - lambda_max).exp()).sum();
    Ok(spec.apply(|l| (l - lambda_max).exp() / z_shifted))
}

/// Unitary `exp(i s h)` of a Hermitian generator.
pub fn unitary_exp(h: &HermitianMatrix, s: f64) -> Result<DMatrix<Complex64>> {
    let spec = eigen_hermitian(h)?;
    Ok(spec.apply_complex(|l| (Complex64::new(0.0, s * l)).exp()))
}
