//! The shift-and-normalize lift of a Hermitian matrix to a density matrix,
//! `rho(x) = (N x + Tr h)^-1 (h + x I)`, with its two labeled marginals and
//! the mutual information they define, plus the embedding of a 3x3 matrix
//! into a 4x4 lift.
//!
//! The shift `x` must clear the negative spectral floor of `h`; a shift is
//! accepted when `x + lambda_min(h) >= -1e-12`, so positive-semidefinite
//! matrices lift at `x = 0`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::index_maps::{matrix_partial_contraction, LabelingScheme};
use crate::matfun::{self, HermitianMatrix, EIG_CUTOFF, STATE_TOL};
use crate::report::InequalityReport;

/// Slack allowed when comparing a shift against the spectral floor.
pub const SHIFT_TOL: f64 = 1e-12;

/// A Hermitian matrix lifted to a density matrix by a diagonal shift.
#[derive(Debug, Clone)]
pub struct LiftedState {
    source: HermitianMatrix,
    rho_x: HermitianMatrix,
    x: f64,
    norm: f64,
    scheme: LabelingScheme,
}

impl LiftedState {
    /// The lifted density matrix `rho(x)`.
    pub fn rho(&self) -> &HermitianMatrix {
        &self.rho_x
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// Normalization denominator `N x + Tr h`.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn scheme(&self) -> &LabelingScheme {
        &self.scheme
    }
}

/// Smallest admissible shift for `h` (the negated bottom of its spectrum,
/// floored at zero for positive-semidefinite input).
pub fn minimum_shift(h: &HermitianMatrix) -> Result<f64> {
    Ok((-h.min_eigenvalue()?).max(0.0))
}

/// Lift `h` to the density matrix `(N x + Tr h)^-1 (h + x I)` under a
/// two-factor labeling of its dimension.
pub fn lift_hermitian(h: &HermitianMatrix, x: f64, scheme: &LabelingScheme) -> Result<LiftedState> {
    if scheme.factors().len() != 2 {
        return Err(Error::BadAxes {
            axes: vec![],
            nfactors: scheme.factors().len(),
        });
    }
    if scheme.total() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: scheme.total(),
            actual: h.dim(),
        });
    }
    let required = minimum_shift(h)?;
    if x < required - SHIFT_TOL {
        return Err(Error::ShiftBelowFloor { given: x, required });
    }
    let norm = h.dim() as f64 * x + h.trace();
    if norm <= 0.0 {
        return Err(Error::DegenerateNormalization { denom: norm });
    }
    let rho_x = h.shifted(x).scaled(1.0 / norm);
    Ok(LiftedState {
        source: h.clone(),
        rho_x,
        x,
        norm,
        scheme: scheme.clone(),
    })
}

/// First marginal of the lift: the m x m matrix of block traces,
/// `(N x + Tr h)^-1 [Tr h^{jk} + n x delta_{jk}]`.
pub fn lift_marginal_1(ls: &LiftedState) -> HermitianMatrix {
    let m = ls.scheme.factors()[0];
    let n = ls.scheme.factors()[1];
    let h = ls.source.as_matrix();
    HermitianMatrix::from_fn(m, |j, jp| {
        let mut block_trace = Complex64::ZERO;
        for k in 0..n {
            block_trace += h[(j * n + k, jp * n + k)];
        }
        if j == jp {
            block_trace += Complex64::new(n as f64 * ls.x, 0.0);
        }
        block_trace / ls.norm
    })
    .expect("block traces of a Hermitian matrix are Hermitian")
}

/// Second marginal of the lift: the n x n sum of diagonal blocks,
/// `(N x + Tr h)^-1 (m x I_n + sum_j h^{jj})`.
pub fn lift_marginal_2(ls: &LiftedState) -> HermitianMatrix {
    let m = ls.scheme.factors()[0];
    let n = ls.scheme.factors()[1];
    let h = ls.source.as_matrix();
    HermitianMatrix::from_fn(n, |k, kp| {
        let mut s = Complex64::ZERO;
        for j in 0..m {
            s += h[(j * n + k, j * n + kp)];
        }
        if k == kp {
            s += Complex64::new(m as f64 * ls.x, 0.0);
        }
        s / ls.norm
    })
    .expect("diagonal-block sums of a Hermitian matrix are Hermitian")
}

/// Mutual information of the lift, `S(1) + S(2) - S(rho(x))`; nonnegative
/// and bounded by `2 min(ln m, ln n)`.
pub fn mutual_information(ls: &LiftedState) -> Result<f64> {
    let s_joint = matfun::matrix_entropy(&ls.rho_x)?;
    let s1 = matfun::matrix_entropy(&lift_marginal_1(ls))?;
    let s2 = matfun::matrix_entropy(&lift_marginal_2(ls))?;
    Ok(s1 + s2 - s_joint)
}

/// `Tr[B ln(B / t)] = sum_i lambda_i (ln lambda_i - ln t)` over the support
/// of a positive-semidefinite matrix `B`.
fn trace_ln_over(b: &HermitianMatrix, t: f64) -> Result<f64> {
    let spec = matfun::eigen_hermitian(b)?;
    if spec.eigenvalues()[0] < -STATE_TOL * t.max(1.0) {
        return Err(Error::NotAState {
            value: spec.eigenvalues()[0],
        });
    }
    Ok(spec
        .eigenvalues()
        .iter()
        .filter(|&&l| l > EIG_CUTOFF)
        .map(|&l| l * (l.ln() - t.ln()))
        .sum())
}

/// Mutual information at zero shift evaluated directly on an unnormalized
/// positive-semidefinite matrix, without constructing the lifted state:
/// the entropy combination of `h`, its block-trace matrix, and its
/// diagonal-block sum, each taken relative to `Tr h`, divided by `Tr h`.
///
/// Agrees with [`mutual_information`] of the `x = 0` lift.
pub fn mutual_information_direct(h: &HermitianMatrix, scheme: &LabelingScheme) -> Result<f64> {
    if scheme.factors().len() != 2 {
        return Err(Error::BadAxes {
            axes: vec![],
            nfactors: scheme.factors().len(),
        });
    }
    if scheme.total() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: scheme.total(),
            actual: h.dim(),
        });
    }
    let t = h.trace();
    if t <= 0.0 {
        return Err(Error::DegenerateNormalization { denom: t });
    }
    let m = scheme.factors()[0];
    let n = scheme.factors()[1];
    let hm = h.as_matrix();
    let block_traces = HermitianMatrix::from_fn(m, |j, jp| {
        (0..n).map(|k| hm[(j * n + k, jp * n + k)]).sum()
    })
    .expect("Hermitian by symmetry of the index sum");
    let diag_block_sum = HermitianMatrix::from_fn(n, |k, kp| {
        (0..m).map(|j| hm[(j * n + k, j * n + kp)]).sum()
    })
    .expect("Hermitian by symmetry of the index sum");

    let joint = trace_ln_over(h, t)?;
    let m1 = trace_ln_over(&block_traces, t)?;
    let m2 = trace_ln_over(&diag_block_sum, t)?;
    Ok((joint - m1 - m2) / t)
}

/// A 3x3 Hermitian matrix embedded in a 4x4 lift: the matrix is zero-padded
/// to 4x4 and shifted by `x` on its three-dimensional support only, i.e. by
/// `x diag(1, 1, 1, 0)`, so the normalization is `3x + Tr h`.
#[derive(Debug, Clone)]
pub struct EmbeddedQutrit {
    h3: HermitianMatrix,
    x: f64,
    rho4: HermitianMatrix,
    norm: f64,
}

impl EmbeddedQutrit {
    pub fn source(&self) -> &HermitianMatrix {
        &self.h3
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// The embedded 4x4 density matrix.
    pub fn rho4(&self) -> &HermitianMatrix {
        &self.rho4
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// First marginal under the (2, 2) labeling of the embedding; equals
    /// `norm^-1 [[h11 + h22 + 2x, h13], [h31, h33 + x]]`.
    pub fn marginal_1(&self) -> HermitianMatrix {
        let scheme = LabelingScheme::pair(2, 2).expect("2*2 factors");
        matrix_partial_contraction(&self.rho4, &scheme, &[0])
            .expect("contraction of a valid embedding")
    }

    /// Second marginal under the (2, 2) labeling; equals
    /// `norm^-1 [[h11 + h33 + 2x, h12], [h21, h22 + x]]`.
    pub fn marginal_2(&self) -> HermitianMatrix {
        let scheme = LabelingScheme::pair(2, 2).expect("2*2 factors");
        matrix_partial_contraction(&self.rho4, &scheme, &[1])
            .expect("contraction of a valid embedding")
    }
}

/// Embed a 3x3 Hermitian matrix as a 4x4 lifted state. The shift must clear
/// the spectral floor of the 3x3 block; the padded dimension always
/// contributes one zero eigenvalue.
pub fn embed_qutrit(h3: &HermitianMatrix, x: f64) -> Result<EmbeddedQutrit> {
    if h3.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            actual: h3.dim(),
        });
    }
    let required = minimum_shift(h3)?;
    if x < required - SHIFT_TOL {
        return Err(Error::ShiftBelowFloor { given: x, required });
    }
    let norm = 3.0 * x + h3.trace();
    if norm <= 0.0 {
        return Err(Error::DegenerateNormalization { denom: norm });
    }
    let rho4 = HermitianMatrix::from_fn(4, |a, b| {
        let mut v = if a < 3 && b < 3 {
            h3.entry(a, b)
        } else {
            Complex64::ZERO
        };
        if a == b && a < 3 {
            v += Complex64::new(x, 0.0);
        }
        v / norm
    })
    .expect("padded shift of a Hermitian matrix is Hermitian");
    Ok(EmbeddedQutrit {
        h3: h3.clone(),
        x,
        rho4,
        norm,
    })
}

/// Mutual-information inequality for a 3x3 Hermitian matrix via the 4x4
/// embedding: `S(marginal 1) + S(marginal 2) - S(rho4) >= 0`.
pub fn qutrit_inequality(h3: &HermitianMatrix, x: f64) -> Result<InequalityReport> {
    let embedded = embed_qutrit(h3, x)?;
    let s_joint = matfun::matrix_entropy(embedded.rho4())?;
    let s1 = matfun::matrix_entropy(&embedded.marginal_1())?;
    let s2 = matfun::matrix_entropy(&embedded.marginal_2())?;
    Ok(
        InequalityReport::new("qutrit-mutual-information", s_joint, s1 + s2, STATE_TOL)
            .with_param("x", x),
    )
}
