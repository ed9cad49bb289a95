//! Brute-force reference implementations shared by the integration suites.
//! Everything here recomputes results from first principles with explicit
//! index loops, independently of the library's labeling machinery.

#![allow(dead_code)]

use entroq::circuit_sim::FrequencyProfile;
use entroq::matfun::{self, HermitianMatrix};
use entroq::{Complex64, DMatrix};

/// Row-major strides for a factor list.
fn strides(factors: &[usize]) -> Vec<usize> {
    let mut s = vec![1; factors.len()];
    for i in (0..factors.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * factors[i + 1];
    }
    s
}

/// Enumerate all tuples over the given factor sizes in row-major order.
fn tuples(factors: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = factors.iter().product();
    let st = strides(factors);
    (0..total)
        .map(|mut s| {
            let mut t = vec![0; factors.len()];
            for (i, &stride) in st.iter().enumerate() {
                t[i] = s / stride;
                s %= stride;
            }
            t
        })
        .collect()
}

/// Index-sum marginal of a probability vector, by explicit loops.
pub fn prob_marginal_oracle(p: &[f64], factors: &[usize], keep: &[usize]) -> Vec<f64> {
    let kept_factors: Vec<usize> = keep.iter().map(|&a| factors[a]).collect();
    let kept_strides = strides(&kept_factors);
    let full_strides = strides(factors);
    let out_len: usize = kept_factors.iter().product();
    let mut out = vec![0.0; out_len];
    for tuple in tuples(factors) {
        let s: usize = tuple
            .iter()
            .zip(&full_strides)
            .map(|(&t, &st)| t * st)
            .sum();
        let r: usize = keep
            .iter()
            .zip(&kept_strides)
            .map(|(&a, &st)| tuple[a] * st)
            .sum();
        out[r] += p[s];
    }
    out
}

/// Index-sum contraction of a matrix, by explicit loops over kept and
/// dropped tuples.
pub fn contraction_oracle(
    m: &HermitianMatrix,
    factors: &[usize],
    keep: &[usize],
) -> Vec<Vec<Complex64>> {
    let kept_factors: Vec<usize> = keep.iter().map(|&a| factors[a]).collect();
    let kept_strides = strides(&kept_factors);
    let full_strides = strides(factors);
    let out_len: usize = kept_factors.iter().product();
    let mut out = vec![vec![Complex64::ZERO; out_len]; out_len];
    let all = tuples(factors);
    for ts in &all {
        let s: usize = ts.iter().zip(&full_strides).map(|(&t, &st)| t * st).sum();
        let rs: usize = keep
            .iter()
            .zip(&kept_strides)
            .map(|(&a, &st)| ts[a] * st)
            .sum();
        for tsp in &all {
            if (0..factors.len()).any(|a| !keep.contains(&a) && ts[a] != tsp[a]) {
                continue;
            }
            let sp: usize = tsp.iter().zip(&full_strides).map(|(&t, &st)| t * st).sum();
            let rsp: usize = keep
                .iter()
                .zip(&kept_strides)
                .map(|(&a, &st)| tsp[a] * st)
                .sum();
            out[rs][rsp] += m.entry(s, sp);
        }
    }
    out
}

/// Largest entry modulus of a complex matrix.
pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &HermitianMatrix, b: &[Vec<Complex64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (r, row) in b.iter().enumerate() {
        for (c, &expected) in row.iter().enumerate() {
            worst = worst.max((a.entry(r, c) - expected).norm());
        }
    }
    worst
}

/// Plain-loop Shannon entropy of raw values.
pub fn shannon_oracle(values: &[f64]) -> f64 {
    let mut h = 0.0;
    for &v in values {
        if v > 1e-14 {
            h -= v * v.ln();
        }
    }
    h
}

/// Relative entropy via the full spectral double sum
/// `sum_i p_i ln p_i - sum_ij p_i |<u_i|v_j>|^2 ln q_j`.
pub fn relative_entropy_double_sum(rho: &HermitianMatrix, sigma: &HermitianMatrix) -> f64 {
    let rs = matfun::eigen_hermitian(rho).unwrap();
    let ss = matfun::eigen_hermitian(sigma).unwrap();
    let n = rho.dim();
    let overlaps: DMatrix<Complex64> = rs.eigenvectors().adjoint() * ss.eigenvectors();
    let mut d = 0.0;
    for i in 0..n {
        let p = rs.eigenvalues()[i];
        if p <= 1e-14 {
            continue;
        }
        d += p * p.ln();
        for j in 0..n {
            let q = ss.eigenvalues()[j];
            let w = overlaps[(i, j)].norm_sqr();
            if w > 0.0 {
                d -= p * w * q.ln();
            }
        }
    }
    d
}

/// Fixed-step classical fourth-order integration of the mode-function
/// equation, independent of the adaptive integrator.
pub fn rk4_mode_function(profile: &FrequencyProfile, t_end: f64, h: f64) -> (Complex64, Complex64) {
    let f = |t: f64, y: [Complex64; 2]| [y[1], -profile.omega_sq(t) * y[0]];
    let mut y = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)];
    let steps = (t_end / h).round() as usize;
    let h = t_end / steps as f64;
    let mut t = 0.0;
    for _ in 0..steps {
        let k1 = f(t, y);
        let k2 = f(t + 0.5 * h, [y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]]);
        let k3 = f(t + 0.5 * h, [y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]]);
        let k4 = f(t + h, [y[0] + h * k3[0], y[1] + h * k3[1]]);
        for c in 0..2 {
            y[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        }
        t += h;
    }
    (y[0], y[1])
}

/// High-resolution trapezoid value of `-∫ w ln w` over a window.
pub fn trapezoid_entropy(density: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let dx = (hi - lo) / (n - 1) as f64;
    let g = |x: f64| {
        let w = density(x);
        if w > 1e-300 {
            -w * w.ln()
        } else {
            0.0
        }
    };
    let mut acc = 0.5 * (g(lo) + g(hi));
    for i in 1..n - 1 {
        acc += g(lo + i as f64 * dx);
    }
    acc * dx
}

/// Kronecker product of two density matrices in the row-major labeling.
pub fn kron(a: &HermitianMatrix, b: &HermitianMatrix) -> HermitianMatrix {
    HermitianMatrix::new(a.as_matrix().kronecker(b.as_matrix())).unwrap()
}
