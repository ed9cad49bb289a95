//! Parametric-oscillator simulation in dimensionless units (hbar = m =
//! omega(0) = 1).
//!
//! The complex mode function solves `eps'' + omega^2(t) eps = 0` with
//! `eps(0) = 1`, `eps'(0) = i`; its conserved Wronskian `Im(eps conj(eps'))
//! = -1` makes the time-dependent Gaussian ground state saturate the
//! uncertainty product `sigma_xx sigma_pp - sigma_xp^2 = 1/4` at all times.
//! On top of the trajectory sit the quadrature dispersions, optical and
//! symplectic tomograms of ground, excited, and coherent states, and the
//! entropic uncertainty bound `ln(pi e)` for conjugate quadrature pairs.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::report::InequalityReport;

/// Largest excitation number supported by the tomogram closed forms; keeps
/// `2^n n!` and the squared polynomial factors comfortably inside `f64`
/// range on the sampled window.
pub const MAX_FOCK: u32 = 12;

/// Margin tolerance for the quadrature-entropy inequality (limited by the
/// numeric quadrature, not by the algebra).
pub const ENTROPY_TOL: f64 = 1e-6;

/// Margin tolerance for the uncertainty-product check.
pub const SR_TOL: f64 = 1e-9;

/// Time profile of the squared frequency.
#[derive(Debug, Clone)]
pub enum FrequencyProfile {
    /// `omega(t) = 1`.
    Constant,
    /// `omega^2(t) = 1 + depth * sin(freq * t)`.
    Modulated { depth: f64, freq: f64 },
    /// Sampled `(t, omega^2)` table with linear interpolation; queries
    /// outside the table clamp to the boundary values.
    Sampled { points: Vec<(f64, f64)> },
}

impl FrequencyProfile {
    pub fn modulated(depth: f64, freq: f64) -> Result<Self> {
        if !depth.is_finite() || !freq.is_finite() {
            return Err(Error::BadProfile("non-finite modulation parameters".into()));
        }
        Ok(Self::Modulated { depth, freq })
    }

    /// Build from a sampled table; times must ascend and the value at t = 0
    /// must match the unit-frequency normalization.
    pub fn from_samples(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::BadProfile("empty frequency table".into()));
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(Error::BadProfile("table times must ascend".into()));
            }
        }
        if points.iter().any(|&(t, w)| !t.is_finite() || !w.is_finite()) {
            return Err(Error::BadProfile("non-finite table entry".into()));
        }
        let profile = Self::Sampled { points };
        let w0 = profile.omega_sq(0.0);
        if (w0 - 1.0).abs() > 1e-8 {
            return Err(Error::BadProfile(format!(
                "omega^2(0) = {w0}, expected 1 in normalized units"
            )));
        }
        Ok(profile)
    }

    /// Squared frequency at time `t`.
    pub fn omega_sq(&self, t: f64) -> f64 {
        match self {
            Self::Constant => 1.0,
            Self::Modulated { depth, freq } => 1.0 + depth * (freq * t).sin(),
            Self::Sampled { points } => {
                if t <= points[0].0 {
                    return points[0].1;
                }
                if t >= points[points.len() - 1].0 {
                    return points[points.len() - 1].1;
                }
                let i = points.partition_point(|&(pt, _)| pt <= t) - 1;
                let (t0, w0) = points[i];
                let (t1, w1) = points[i + 1];
                w0 + (w1 - w0) * (t - t0) / (t1 - t0)
            }
        }
    }
}

/// Sampled complex mode function and its derivative on a uniform time grid,
/// with the squared frequency at each node for interpolation.
#[derive(Debug, Clone)]
pub struct EpsilonTrajectory {
    times: Vec<f64>,
    eps: Vec<Complex64>,
    deps: Vec<Complex64>,
    omega_sq: Vec<f64>,
}

impl EpsilonTrajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn eps(&self) -> &[Complex64] {
        &self.eps
    }

    pub fn deps(&self) -> &[Complex64] {
        &self.deps
    }

    pub fn t_max(&self) -> f64 {
        *self.times.last().expect("nonempty grid")
    }

    /// Largest deviation of `Im(eps conj(eps')) + 1` over the grid.
    pub fn max_wronskian_drift(&self) -> f64 {
        self.eps
            .iter()
            .zip(&self.deps)
            .map(|(e, de)| ((e * de.conj()).im + 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Mode function and derivative at `t`, by cubic Hermite interpolation
    /// between grid nodes (the stored derivative data makes the interpolant
    /// fourth-order accurate, far below the integrator tolerance).
    pub fn sample(&self, t: f64) -> Result<(Complex64, Complex64)> {
        let t_max = self.t_max();
        if !(t.is_finite() && (-1e-12..=t_max + 1e-12).contains(&t)) {
            return Err(Error::TimeOutOfRange { t, t_max });
        }
        let t = t.clamp(0.0, t_max);
        let i = match self
            .times
            .partition_point(|&ti| ti <= t)
            .checked_sub(1)
        {
            Some(i) => i.min(self.times.len() - 2),
            None => 0,
        };
        let (t0, t1) = (self.times[i], self.times[i + 1]);
        let h = t1 - t0;
        let s = (t - t0) / h;

        let hermite = |y0: Complex64, y1: Complex64, d0: Complex64, d1: Complex64| {
            let s2 = s * s;
            let s3 = s2 * s;
            y0 * (2.0 * s3 - 3.0 * s2 + 1.0)
                + d0 * (h * (s3 - 2.0 * s2 + s))
                + y1 * (-2.0 * s3 + 3.0 * s2)
                + d1 * (h * (s3 - s2))
        };

        // eps interpolates from (eps, eps'); eps' from (eps', eps'' = -w^2 eps).
        let e = hermite(self.eps[i], self.eps[i + 1], self.deps[i], self.deps[i + 1]);
        let dd0 = -self.omega_sq[i] * self.eps[i];
        let dd1 = -self.omega_sq[i + 1] * self.eps[i + 1];
        let de = hermite(self.deps[i], self.deps[i + 1], dd0, dd1);
        Ok((e, de))
    }
}

const DOPRI_C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const DOPRI_A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const DOPRI_B: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const DOPRI_B_LOW: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

type OscState = [Complex64; 2];

fn rhs(profile: &FrequencyProfile, t: f64, y: &OscState) -> OscState {
    [y[1], -profile.omega_sq(t) * y[0]]
}

/// One embedded fifth(fourth)-order step; returns the new state and the
/// scaled error norm (<= 1 means the step is acceptable).
fn dopri_step(profile: &FrequencyProfile, t: f64, y: &OscState, h: f64, tol: f64) -> (OscState, f64) {
    let mut k = [[Complex64::ZERO; 2]; 7];
    k[0] = rhs(profile, t, y);
    for stage in 1..6 {
        let mut ys = *y;
        for comp in 0..2 {
            let mut acc = Complex64::ZERO;
            for (prev, kp) in k.iter().enumerate().take(stage) {
                let a = DOPRI_A[stage - 1][prev];
                if a != 0.0 {
                    acc += a * kp[comp];
                }
            }
            ys[comp] += h * acc;
        }
        k[stage] = rhs(profile, t + DOPRI_C[stage - 1] * h, &ys);
    }
    let mut y_new = *y;
    for comp in 0..2 {
        let mut acc = Complex64::ZERO;
        for stage in 0..6 {
            if DOPRI_B[stage] != 0.0 {
                acc += DOPRI_B[stage] * k[stage][comp];
            }
        }
        y_new[comp] += h * acc;
    }
    k[6] = rhs(profile, t + h, &y_new);

    let mut err_norm: f64 = 0.0;
    for comp in 0..2 {
        let mut err = Complex64::ZERO;
        for stage in 0..7 {
            let d = DOPRI_B[stage] - DOPRI_B_LOW[stage];
            if d != 0.0 {
                err += d * k[stage][comp];
            }
        }
        let scale = tol + tol * y[comp].norm().max(y_new[comp].norm());
        err_norm = err_norm.max((h * err).norm() / scale);
    }
    (y_new, err_norm)
}

/// Integrate the mode function to `t_max` with the default sampling density
/// (200 nodes per unit time, at least 501).
pub fn integrate_epsilon(
    profile: &FrequencyProfile,
    t_max: f64,
    tol: f64,
) -> Result<EpsilonTrajectory> {
    let samples = ((t_max * 200.0).ceil() as usize + 1).clamp(501, 200_001);
    integrate_epsilon_sampled(profile, t_max, tol, samples)
}

/// Integrate the mode function, emitting `samples` uniformly spaced nodes
/// (endpoints included). Adaptive embedded Runge–Kutta steps land exactly on
/// every node; the local error per step is held at `tol` and the conserved
/// Wronskian is verified to within `100 tol` after the run.
pub fn integrate_epsilon_sampled(
    profile: &FrequencyProfile,
    t_max: f64,
    tol: f64,
    samples: usize,
) -> Result<EpsilonTrajectory> {
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Error::BadProfile(format!("non-positive horizon {t_max}")));
    }
    if !(1e-12..=1e-4).contains(&tol) {
        return Err(Error::BadProfile(format!("tolerance {tol} outside [1e-12, 1e-4]")));
    }
    if samples < 2 {
        return Err(Error::BadProfile("need at least two sample nodes".into()));
    }

    let n = samples;
    let dt_out = t_max / (n - 1) as f64;
    let mut times = Vec::with_capacity(n);
    let mut eps = Vec::with_capacity(n);
    let mut deps = Vec::with_capacity(n);
    let mut omega_sq = Vec::with_capacity(n);

    let mut t = 0.0;
    let mut y: OscState = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)];
    times.push(0.0);
    eps.push(y[0]);
    deps.push(y[1]);
    omega_sq.push(profile.omega_sq(0.0));

    let h_min = t_max * 1e-14;
    let mut h = dt_out.min(0.05);
    for i in 1..n {
        let target = if i == n - 1 { t_max } else { i as f64 * dt_out };
        while t < target {
            let h_try = h.min(target - t);
            let (y_new, err_norm) = dopri_step(profile, t, &y, h_try, tol);
            if !err_norm.is_finite() {
                return Err(Error::IntegrationFailed {
                    t,
                    reason: "non-finite state",
                });
            }
            if err_norm <= 1.0 {
                t += h_try;
                y = y_new;
                let grow = 0.9 * err_norm.powf(-0.2);
                h = (h_try * grow.clamp(0.2, 5.0)).min(t_max);
            } else {
                h = h_try * (0.9 * err_norm.powf(-0.2)).clamp(0.2, 0.9);
                if h < h_min {
                    return Err(Error::IntegrationFailed {
                        t,
                        reason: "step size underflow",
                    });
                }
            }
        }
        t = target;
        times.push(target);
        eps.push(y[0]);
        deps.push(y[1]);
        omega_sq.push(profile.omega_sq(target));
    }

    let traj = EpsilonTrajectory {
        times,
        eps,
        deps,
        omega_sq,
    };
    let drift = traj.max_wronskian_drift();
    if drift > 100.0 * tol {
        return Err(Error::IntegrationFailed {
            t: t_max,
            reason: "Wronskian drift exceeded budget",
        });
    }
    Ok(traj)
}

/// Position/momentum dispersions and their correlation at one time.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureStats {
    pub sigma_xx: f64,
    pub sigma_pp: f64,
    pub sigma_xp: f64,
    pub r: f64,
    pub t: f64,
}

impl QuadratureStats {
    /// Build from raw dispersion values (used for hypothetical mixed-state
    /// inputs; trajectory-derived stats always satisfy the pure-state
    /// identity `sigma_xx sigma_pp - sigma_xp^2 = 1/4`).
    pub fn from_raw(sigma_xx: f64, sigma_pp: f64, sigma_xp: f64, t: f64) -> Result<Self> {
        if !(sigma_xx.is_finite() && sigma_pp.is_finite() && sigma_xp.is_finite()) {
            return Err(Error::BadDispersions("non-finite dispersion"));
        }
        if sigma_xx <= 0.0 || sigma_pp <= 0.0 {
            return Err(Error::BadDispersions("dispersions must be positive"));
        }
        let r = sigma_xp / (sigma_xx * sigma_pp).sqrt();
        if r.abs() >= 1.0 {
            return Err(Error::BadDispersions("correlation coefficient out of (-1, 1)"));
        }
        Ok(Self {
            sigma_xx,
            sigma_pp,
            sigma_xp,
            r,
            t,
        })
    }

    pub fn purity_product(&self) -> f64 {
        self.sigma_xx * self.sigma_pp - self.sigma_xp * self.sigma_xp
    }
}

/// Dispersions of the trajectory at time `t`:
/// `sigma_xx = |eps|^2 / 2`, `sigma_pp = |eps'|^2 / 2`,
/// `sigma_xp = Re(eps conj(eps')) / 2`.
pub fn quadrature_stats(traj: &EpsilonTrajectory, t: f64) -> Result<QuadratureStats> {
    let (e, de) = traj.sample(t)?;
    QuadratureStats::from_raw(
        e.norm_sqr() / 2.0,
        de.norm_sqr() / 2.0,
        (e * de.conj()).re / 2.0,
        t,
    )
}

/// Uncertainty-product check `sigma_xx sigma_pp >= [4 (1 - r^2)]^-1`;
/// saturated by the pure Gaussian family.
pub fn sr_bound_check(qs: &QuadratureStats) -> InequalityReport {
    let bound = 1.0 / (4.0 * (1.0 - qs.r * qs.r));
    InequalityReport::new("schrodinger-robertson", bound, qs.sigma_xx * qs.sigma_pp, SR_TOL)
        .with_param("t", qs.t)
}

/// Which oscillator state a tomogram describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateSpec {
    Ground,
    Fock(u32),
    Coherent(Complex64),
}

/// Quadrature frame of a tomogram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Frame {
    Optical { theta: f64 },
    Symplectic { mu: f64, nu: f64 },
}

impl Frame {
    fn coefficients(&self) -> (f64, f64) {
        match *self {
            Frame::Optical { theta } => (theta.cos(), theta.sin()),
            Frame::Symplectic { mu, nu } => (mu, nu),
        }
    }
}

/// Number of curve samples emitted per tomogram.
const CURVE_POINTS: usize = 1201;

/// Half-width of the sampled window in standard deviations.
const WINDOW_SIGMAS: f64 = 12.0;

/// Physicists' Hermite polynomial via the three-term recurrence
/// `H_0 = 1`, `H_1 = 2y`, `H_{n+1} = 2 y H_n - 2 n H_{n-1}`.
pub fn hermite_eval(n: u32, y: f64) -> Result<f64> {
    if n > MAX_FOCK {
        return Err(Error::ExcitationTooLarge { n, max: MAX_FOCK });
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 2.0 * y;
    for k in 1..n {
        let next = 2.0 * y * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Probability density of the measured quadrature for one state, one frame,
/// one time: a Gaussian of the frame-dependent variance, displaced for
/// coherent states and multiplied by the squared-polynomial factor
/// `H_n^2(X / sqrt(2 sigma)) / (2^n n!)` for excited states.
#[derive(Debug, Clone)]
pub struct TomogramCurve {
    pub state: StateSpec,
    pub frame: Frame,
    /// Mean of the distribution (zero except for coherent states).
    pub mean: f64,
    /// Variance of the underlying Gaussian; the full distribution of an
    /// n-quantum state has second moment `(2n + 1)` times this.
    pub variance: f64,
    samples: Vec<(f64, f64)>,
}

impl TomogramCurve {
    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    /// Lower and upper edge of the sampled window.
    pub fn window(&self) -> (f64, f64) {
        (
            self.mean - WINDOW_SIGMAS * self.variance.sqrt(),
            self.mean + WINDOW_SIGMAS * self.variance.sqrt(),
        )
    }

    /// Evaluate the density at a quadrature value.
    pub fn density(&self, x: f64) -> f64 {
        let gauss = (-(x - self.mean) * (x - self.mean) / (2.0 * self.variance)).exp()
            / (2.0 * std::f64::consts::PI * self.variance).sqrt();
        match self.state {
            StateSpec::Ground | StateSpec::Coherent(_) => gauss,
            StateSpec::Fock(n) => {
                let y = x / (2.0 * self.variance).sqrt();
                let h = hermite_eval(n, y).expect("n validated at construction");
                let mut weight = 1.0;
                for k in 1..=n {
                    weight *= 2.0 * k as f64;
                }
                gauss * h * h / weight
            }
        }
    }

    /// Trapezoid integral of the sampled curve (the grid resolves the
    /// density well below the validation tolerance).
    pub fn integral(&self) -> f64 {
        trapezoid(&self.samples)
    }

    /// Trapezoid second moment `<X^2>` of the sampled curve.
    pub fn second_moment(&self) -> f64 {
        let weighted: Vec<(f64, f64)> = self
            .samples
            .iter()
            .map(|&(x, w)| (x, x * x * w))
            .collect();
        trapezoid(&weighted)
    }
}

fn trapezoid(samples: &[(f64, f64)]) -> f64 {
    samples
        .windows(2)
        .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1 + w[1].1))
        .sum()
}

fn build_curve(
    traj: &EpsilonTrajectory,
    t: f64,
    frame: Frame,
    state: &StateSpec,
) -> Result<TomogramCurve> {
    let (mu, nu) = frame.coefficients();
    if mu == 0.0 && nu == 0.0 {
        return Err(Error::DegenerateFrame);
    }
    match *state {
        StateSpec::Fock(n) if n > MAX_FOCK => {
            return Err(Error::ExcitationTooLarge { n, max: MAX_FOCK })
        }
        StateSpec::Coherent(alpha) if !alpha.re.is_finite() || !alpha.im.is_finite() => {
            return Err(Error::Domain("non-finite coherent amplitude"));
        }
        _ => {}
    }

    let qs = quadrature_stats(traj, t)?;
    let variance = mu * mu * qs.sigma_xx + nu * nu * qs.sigma_pp + 2.0 * mu * nu * qs.sigma_xp;
    if variance <= 0.0 {
        return Err(Error::BadDispersions("non-positive frame variance"));
    }
    let mean = match *state {
        StateSpec::Coherent(alpha) => {
            let (e, de) = traj.sample(t)?;
            std::f64::consts::SQRT_2 * (mu * (alpha * e.conj()).re + nu * (alpha * de.conj()).re)
        }
        _ => 0.0,
    };

    let mut curve = TomogramCurve {
        state: *state,
        frame,
        mean,
        variance,
        samples: Vec::with_capacity(CURVE_POINTS),
    };
    let (lo, hi) = curve.window();
    let dx = (hi - lo) / (CURVE_POINTS - 1) as f64;
    curve.samples = (0..CURVE_POINTS)
        .map(|i| {
            let x = lo + i as f64 * dx;
            (x, curve.density(x))
        })
        .collect();

    let total = curve.integral();
    if (total - 1.0).abs() > 1e-6 {
        return Err(Error::QuadratureFailed);
    }
    Ok(curve)
}

/// Tomogram of the quadrature `X = q cos(theta) + p sin(theta)` selected by
/// the local-oscillator phase.
pub fn optical_tomogram(
    traj: &EpsilonTrajectory,
    t: f64,
    theta: f64,
    state: &StateSpec,
) -> Result<TomogramCurve> {
    build_curve(traj, t, Frame::Optical { theta }, state)
}

/// Tomogram of the scaled quadrature `X = mu q + nu p`.
pub fn symplectic_tomogram(
    traj: &EpsilonTrajectory,
    t: f64,
    mu: f64,
    nu: f64,
    state: &StateSpec,
) -> Result<TomogramCurve> {
    build_curve(traj, t, Frame::Symplectic { mu, nu }, state)
}

/// Adaptive Simpson quadrature with an absolute-error budget.
fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            return Ok(left + right + delta / 15.0);
        }
        if depth == 0 {
            return Err(Error::QuadratureFailed);
        }
        let half_tol = 0.5 * tol;
        Ok(recurse(f, a, m, fa, flm, fm, left, half_tol, depth - 1)?
            + recurse(f, m, b, fm, frm, fb, right, half_tol, depth - 1)?)
    }

    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(fa, fm, fb, b - a);
    recurse(f, a, b, fa, fm, fb, whole, tol, 48)
}

/// Differential entropy `-∫ w ln w dX` of a tomogram, by adaptive quadrature
/// over the sampled window (absolute error below `1e-6`); equals
/// `ln(2 pi e sigma) / 2` for the Gaussian states.
pub fn tomogram_entropy(curve: &TomogramCurve) -> Result<f64> {
    let (lo, hi) = curve.window();
    let integrand = |x: f64| {
        let w = curve.density(x);
        if w > 1e-300 {
            -w * w.ln()
        } else {
            0.0
        }
    };
    adaptive_simpson(&integrand, lo, hi, 1e-7)
}

/// Entropic uncertainty check for the conjugate pair `(theta, theta + pi/2)`:
/// the two tomogram entropies sum to at least `ln(pi e)`.
pub fn entropic_uncertainty_check(
    traj: &EpsilonTrajectory,
    t: f64,
    theta: f64,
    state: &StateSpec,
) -> Result<InequalityReport> {
    let h1 = tomogram_entropy(&optical_tomogram(traj, t, theta, state)?)?;
    let h2 = tomogram_entropy(&optical_tomogram(
        traj,
        t,
        theta + std::f64::consts::FRAC_PI_2,
        state,
    )?)?;
    let bound = (std::f64::consts::PI * std::f64::consts::E).ln();
    Ok(
        InequalityReport::new("entropic-uncertainty", bound, h1 + h2, ENTROPY_TOL)
            .with_param("t", t)
            .with_param("theta", theta),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn unit_traj(t_max: f64) -> EpsilonTrajectory {
        integrate_epsilon(&FrequencyProfile::Constant, t_max, 1e-10).unwrap()
    }

    #[test]
    fn constant_frequency_solution_is_unit_phasor() {
        let traj = unit_traj(2.0 * PI);
        let (e, de) = traj.sample(2.0 * PI).unwrap();
        assert!((e - Complex64::new(1.0, 0.0)).norm() < 1e-8, "eps(2pi) = {e}");
        assert!((de - Complex64::new(0.0, 1.0)).norm() < 1e-8);
        for &ei in traj.eps() {
            assert!((ei.norm() - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn modulated_profile_conserves_wronskian() {
        let profile = FrequencyProfile::modulated(0.1, 2.0).unwrap();
        let traj = integrate_epsilon(&profile, 10.0, 1e-10).unwrap();
        assert!(traj.max_wronskian_drift() < 1e-8);
    }

    #[test]
    fn constant_frequency_stats() {
        let traj = unit_traj(7.0);
        for &t in &[0.0, 1.7, 6.99] {
            let qs = quadrature_stats(&traj, t).unwrap();
            assert!((qs.sigma_xx - 0.5).abs() < 1e-8);
            assert!((qs.sigma_pp - 0.5).abs() < 1e-8);
            assert!(qs.sigma_xp.abs() < 1e-8);
            assert!(qs.r.abs() < 1e-7);
        }
    }

    #[test]
    fn purity_identity_holds_off_grid() {
        let profile = FrequencyProfile::modulated(0.1, 2.0).unwrap();
        let traj = integrate_epsilon(&profile, 10.0, 1e-10).unwrap();
        for i in 0..100 {
            let t = 0.05 + i as f64 * 0.0991;
            let qs = quadrature_stats(&traj, t).unwrap();
            assert!(
                (qs.purity_product() - 0.25).abs() < 1e-8,
                "t = {t}: {}",
                qs.purity_product()
            );
        }
    }

    #[test]
    fn sr_check_saturates_for_trajectory_and_passes_for_mixed() {
        let traj = unit_traj(3.0);
        let qs = quadrature_stats(&traj, 1.3).unwrap();
        let r = sr_bound_check(&qs);
        assert!(r.pass);
        assert!(r.margin.abs() < 1e-8);

        let mixed = QuadratureStats::from_raw(1.0, 0.5, 0.0, 0.0).unwrap();
        let r = sr_bound_check(&mixed);
        assert!(r.pass);
        assert!(r.margin > 0.1);
    }

    #[test]
    fn rejects_out_of_range_time_and_bad_tolerance() {
        let traj = unit_traj(1.0);
        assert!(matches!(traj.sample(1.5), Err(Error::TimeOutOfRange { .. })));
        assert!(integrate_epsilon(&FrequencyProfile::Constant, 1.0, 1e-2).is_err());
    }

    #[test]
    fn ground_tomogram_is_standard_gaussian() {
        let traj = unit_traj(1.0);
        let c = optical_tomogram(&traj, 0.5, 0.3, &StateSpec::Ground).unwrap();
        assert!((c.variance - 0.5).abs() < 1e-8);
        assert!(c.mean.abs() < 1e-12);
        assert!((c.integral() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn coherent_mean_at_origin() {
        let traj = unit_traj(1.0);
        let alpha = Complex64::new(1.0, 0.0);
        let c = optical_tomogram(&traj, 0.0, 0.0, &StateSpec::Coherent(alpha)).unwrap();
        assert!((c.mean - std::f64::consts::SQRT_2).abs() < 1e-10, "mean {}", c.mean);
        assert!((c.variance - 0.5).abs() < 1e-10);
    }

    #[test]
    fn first_excited_matches_closed_form() {
        let traj = unit_traj(1.0);
        let c = optical_tomogram(&traj, 0.7, 0.4, &StateSpec::Fock(1)).unwrap();
        let sigma = c.variance;
        for &x in &[0.0, 0.3, -0.9, 2.2] {
            let expected = x * x / (2.0 * PI * sigma).sqrt() / sigma * (-x * x / (2.0 * sigma)).exp();
            assert!((c.density(x) - expected).abs() < 1e-10);
        }
        assert!((c.integral() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn symplectic_frame_matches_optical_on_the_circle() {
        let traj = unit_traj(2.0);
        let theta = 1.1;
        let opt = optical_tomogram(&traj, 1.5, theta, &StateSpec::Ground).unwrap();
        let sym =
            symplectic_tomogram(&traj, 1.5, theta.cos(), theta.sin(), &StateSpec::Ground).unwrap();
        assert_eq!(opt.variance, sym.variance);
        assert_eq!(opt.mean, sym.mean);
        assert!(matches!(
            symplectic_tomogram(&traj, 1.5, 0.0, 0.0, &StateSpec::Ground),
            Err(Error::DegenerateFrame)
        ));
    }

    #[test]
    fn hermite_values() {
        assert_eq!(hermite_eval(0, 3.3).unwrap(), 1.0);
        assert_eq!(hermite_eval(2, 1.0).unwrap(), 2.0);
        assert_eq!(hermite_eval(3, 2.0).unwrap(), 40.0);
        assert!(matches!(
            hermite_eval(13, 0.0),
            Err(Error::ExcitationTooLarge { .. })
        ));
    }

    #[test]
    fn third_excited_tomogram_has_three_interior_zeros() {
        let traj = unit_traj(1.0);
        let c = optical_tomogram(&traj, 0.3, 0.2, &StateSpec::Fock(3)).unwrap();
        let sigma = c.variance;
        // The cubic polynomial factor vanishes at y = 0 and y^2 = 3/2,
        // carving the density into four lobes.
        let scale = (2.0 * sigma).sqrt();
        for y in [0.0, (1.5f64).sqrt(), -(1.5f64).sqrt()] {
            assert!(c.density(y * scale) < 1e-12);
        }
        for y in [0.8, -0.8, 1.8, -1.8] {
            assert!(c.density(y * scale) > 1e-3);
        }
        assert!((c.integral() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn gaussian_entropy_closed_form() {
        let traj = unit_traj(1.0);
        let c = optical_tomogram(&traj, 0.2, 0.0, &StateSpec::Ground).unwrap();
        let h = tomogram_entropy(&c).unwrap();
        let expected = 0.5 * (PI * std::f64::consts::E).ln();
        assert!((h - expected).abs() < 1e-6, "entropy {h}");

        // Mean shifts do not change the entropy.
        let cc =
            optical_tomogram(&traj, 0.2, 0.0, &StateSpec::Coherent(Complex64::new(0.7, -0.4)))
                .unwrap();
        let hc = tomogram_entropy(&cc).unwrap();
        assert!((hc - h).abs() < 2e-6);
    }

    #[test]
    fn uncertainty_bound_is_saturated_by_ground_state() {
        let traj = unit_traj(2.0);
        for &theta in &[0.0, 0.4, 1.2] {
            let r = entropic_uncertainty_check(&traj, 1.0, theta, &StateSpec::Ground).unwrap();
            assert!(r.pass);
            assert!(r.margin.abs() < 1e-6, "theta {theta}: margin {}", r.margin);
        }
    }

    #[test]
    fn excited_state_exceeds_the_bound() {
        let traj = unit_traj(1.0);
        let r = entropic_uncertainty_check(&traj, 0.5, 0.0, &StateSpec::Fock(1)).unwrap();
        assert!(r.pass);
        assert!(r.margin > 0.1);
    }

    #[test]
    fn sampled_profile_interpolates_and_validates() {
        let table = vec![(0.0, 1.0), (1.0, 1.2), (2.0, 0.9)];
        let p = FrequencyProfile::from_samples(table).unwrap();
        assert!((p.omega_sq(0.5) - 1.1).abs() < 1e-12);
        assert!((p.omega_sq(5.0) - 0.9).abs() < 1e-12);
        assert!(FrequencyProfile::from_samples(vec![(0.0, 2.0)]).is_err());
    }
}
