//! Index relabelings and the marginalization operators they induce.
//!
//! A flat level index `s = 0..N` is mapped row-major onto pairs `(j, k)` or
//! triples `(j, k, l)` of smaller indices. Summing over dropped positions
//! then gives "marginals" of probability vectors and partial-trace-style
//! contractions of matrices, exactly as if the single system were composite.
//!
//! The off-diagonal entries of a matrix contraction are the unique index-sum
//! pairing that preserves Hermiticity (and hence positivity): keeping the
//! first of two factors sends `(j, j')` to `sum_k m[(j,k), (j',k)]`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matfun::HermitianMatrix;

/// Tolerance on the total probability of a [`ProbabilityVector`].
pub const PROB_SUM_TOL: f64 = 1e-10;

/// Entries this far below zero are treated as rounding noise and clamped.
pub const PROB_NEG_TOL: f64 = 1e-12;

/// Row-major bijection between flat indices `0..total` and tuples with the
/// given factor sizes (one to three factors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingScheme {
    factors: Vec<usize>,
    total: usize,
}

impl LabelingScheme {
    pub fn new(factors: &[usize]) -> Result<Self> {
        if factors.is_empty() || factors.len() > 3 {
            return Err(Error::BadFactors {
                factors: factors.to_vec(),
                total: 0,
            });
        }
        if factors.contains(&0) {
            return Err(Error::BadFactors {
                factors: factors.to_vec(),
                total: 0,
            });
        }
        let total = factors.iter().product();
        Ok(Self {
            factors: factors.to_vec(),
            total,
        })
    }

    pub fn pair(m: usize, n: usize) -> Result<Self> {
        Self::new(&[m, n])
    }

    pub fn triple(n1: usize, n2: usize, n3: usize) -> Result<Self> {
        Self::new(&[n1, n2, n3])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Decompose a flat index into its row-major tuple.
    pub fn flat_to_tuple(&self, s: usize) -> Result<Vec<usize>> {
        if s >= self.total {
            return Err(Error::OutOfRange {
                index: s,
                len: self.total,
            });
        }
        let mut rest = s;
        let mut tuple = vec![0; self.factors.len()];
        for (i, &f) in self.factors.iter().enumerate().rev() {
            tuple[i] = rest % f;
            rest /= f;
        }
        Ok(tuple)
    }

    /// Recompose a tuple into its flat index.
    pub fn tuple_to_flat(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.factors.len() {
            return Err(Error::LengthMismatch(tuple.len(), self.factors.len()));
        }
        let mut s = 0;
        for (&t, &f) in tuple.iter().zip(&self.factors) {
            if t >= f {
                return Err(Error::OutOfRange { index: t, len: f });
            }
            s = s * f + t;
        }
        Ok(s)
    }

    /// Validate an axis set (strictly ascending, nonempty, in range) and
    /// return the scheme of the kept factors.
    pub fn kept_scheme(&self, keep: &[usize]) -> Result<LabelingScheme> {
        if keep.is_empty()
            || keep.iter().any(|&a| a >= self.factors.len())
            || keep.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::BadAxes {
                axes: keep.to_vec(),
                nfactors: self.factors.len(),
            });
        }
        let kept: Vec<usize> = keep.iter().map(|&a| self.factors[a]).collect();
        LabelingScheme::new(&kept)
    }

    fn project(&self, tuple: &[usize], keep: &[usize]) -> Vec<usize> {
        keep.iter().map(|&a| tuple[a]).collect()
    }
}

/// Nonnegative reals summing to one. Construction clamps entries above
/// `-PROB_NEG_TOL` to zero and rejects anything worse.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    probs: Vec<f64>,
}

impl ProbabilityVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        let mut probs = values;
        for (i, p) in probs.iter_mut().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFinite { row: i, col: 0 });
            }
            if *p < -PROB_NEG_TOL {
                return Err(Error::NegativeProbability {
                    index: i,
                    value: *p,
                });
            }
            if *p < 0.0 {
                *p = 0.0;
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self { probs })
    }

    pub fn uniform(n: usize) -> Self {
        Self {
            probs: vec![1.0 / n as f64; n],
        }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// Marginal of `p` over the dropped axes of the labeling.
pub fn prob_marginal(
    p: &ProbabilityVector,
    scheme: &LabelingScheme,
    keep: &[usize],
) -> Result<ProbabilityVector> {
    if p.len() != scheme.total() {
        return Err(Error::LengthMismatch(p.len(), scheme.total()));
    }
    let kept = scheme.kept_scheme(keep)?;
    let mut out = vec![0.0; kept.total()];
    for s in 0..scheme.total() {
        let tuple = scheme.flat_to_tuple(s)?;
        let t = kept.tuple_to_flat(&scheme.project(&tuple, keep))?;
        out[t] += p.probs[s];
    }
    ProbabilityVector::new(out)
}

/// Partial-trace-style contraction of a matrix in the labeling: the output is
/// indexed by the kept axes and sums matrix elements that agree on every
/// dropped axis. Hermiticity and positivity are preserved and the trace is
/// unchanged.
pub fn matrix_partial_contraction(
    m: &HermitianMatrix,
    scheme: &LabelingScheme,
    keep: &[usize],
) -> Result<HermitianMatrix> {
    if m.dim() != scheme.total() {
        return Err(Error::DimensionMismatch {
            expected: scheme.total(),
            actual: m.dim(),
        });
    }
    let kept = scheme.kept_scheme(keep)?;
    let dropped: Vec<usize> = (0..scheme.factors().len())
        .filter(|a| !keep.contains(a))
        .collect();

    let nk = kept.total();
    let mut out = vec![Complex64::ZERO; nk * nk];
    for s in 0..scheme.total() {
        let ts = scheme.flat_to_tuple(s)?;
        let rs = kept.tuple_to_flat(&scheme.project(&ts, keep))?;
        for sp in 0..scheme.total() {
            let tsp = scheme.flat_to_tuple(sp)?;
            if dropped.iter().any(|&a| ts[a] != tsp[a]) {
                continue;
            }
            let rsp = kept.tuple_to_flat(&scheme.project(&tsp, keep))?;
            out[rs * nk + rsp] += m.entry(s, sp);
        }
    }
    HermitianMatrix::from_fn(nk, |a, b| out[a * nk + b])
}
