//! Seeded generators for sweep inputs: Hermitian matrices with Gaussian
//! entries, Haar-random pure states, mixed states as rank-k mixtures,
//! probability vectors, and real observables. A fixed seed reproduces the
//! same stream on every platform.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::index_maps::ProbabilityVector;
use crate::matfun::HermitianMatrix;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard normal via Box–Muller.
fn normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.random::<f64>().max(1e-300);
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

fn complex_normal(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(normal(rng), normal(rng))
}

/// Hermitian matrix `(G + G†)/2` with independent complex Gaussian entries.
pub fn hermitian(rng: &mut impl Rng, dim: usize) -> HermitianMatrix {
    let g = DMatrix::from_fn(dim, dim, |_, _| complex_normal(rng));
    let sym = (&g + g.adjoint()).scale(0.5);
    HermitianMatrix::new(sym).expect("symmetrized Gaussian matrix is Hermitian")
}

/// Haar-random pure-state projector.
pub fn pure_state(rng: &mut impl Rng, dim: usize) -> HermitianMatrix {
    let psi: Vec<Complex64> = (0..dim).map(|_| complex_normal(rng)).collect();
    HermitianMatrix::from_pure_state(&psi).expect("Gaussian vector is almost surely nonzero")
}

/// Random density matrix: a mixture of `k` Haar-random pure states with
/// weights drawn uniformly on the simplex, `k` uniform in `1..=dim`.
pub fn density_matrix(rng: &mut impl Rng, dim: usize) -> HermitianMatrix {
    let k = rng.random_range(1..=dim);
    let weights = simplex_point(rng, k);
    let mut acc = DMatrix::<Complex64>::zeros(dim, dim);
    for &w in &weights {
        acc += pure_state(rng, dim).as_matrix() * Complex64::new(w, 0.0);
    }
    HermitianMatrix::new(acc).expect("convex mixture of projectors is Hermitian")
}

/// Uniform point on the probability simplex (normalized exponentials).
fn simplex_point(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n)
        .map(|_| -(rng.random::<f64>().max(1e-300)).ln())
        .collect();
    let sum: f64 = v.iter().sum();
    for x in &mut v {
        *x /= sum;
    }
    v
}

pub fn probability_vector(rng: &mut impl Rng, n: usize) -> ProbabilityVector {
    ProbabilityVector::new(simplex_point(rng, n)).expect("normalized by construction")
}

/// Real observable values, i.i.d. standard normal.
pub fn observable_values(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| normal(rng)).collect()
}

/// Random unitary: the phase-fixed eigenbasis of a random Hermitian matrix.
pub fn unitary(rng: &mut impl Rng, dim: usize) -> DMatrix<Complex64> {
    let h = hermitian(rng, dim);
    crate::matfun::eigen_hermitian(&h)
        .expect("random Hermitian matrix decomposes")
        .eigenvectors()
        .clone()
}
