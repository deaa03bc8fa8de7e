//! Classical layer: the free matrix flow `X(t) = X₀ + t Y₀` and the reduced
//! spin Calogero-Moser dynamics of `(x, p, L)`, cross-checked against each
//! other.
//!
//! With `U X U† = diag(x)` and `V = U Y U†`, the reduced variables are
//! `p = diag V` and `L = [D, V]`. They obey
//!
//! ```text
//! ẋ_i = p_i
//! ṗ_i = Σ_{k≠i} −2 L_ik L_ki / (x_i − x_k)³            (− ω² x_i)
//! L̇_ij = Σ_{k≠i,j} L_ik L_kj [(x_i − x_k)⁻² − (x_j − x_k)⁻²]
//! ```

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::liealg::SymmetryClass;
use crate::numerics::{hermitian_eig, rk4_observed, sym_eig, DEFAULT_EIG_TOL};
use crate::{CMat, Error, Mat, Result};

/// Default spectral-gap guard ε.
pub const DEFAULT_GAP: f64 = 1e-8;
/// Default acceptance tolerance of [`cross_check`].
pub const CROSS_CHECK_TOL: f64 = 1e-6;
const RESAMPLE_CAP: usize = 1000;

/// A point `(X, Y)` of the free matrix phase space.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeState {
    pub class: SymmetryClass,
    pub x: CMat,
    pub y: CMat,
}

/// Reduced variables; `l` is anti-Hermitian with zero diagonal and is
/// exactly real for the orthogonal class.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedState {
    pub class: SymmetryClass,
    pub x: Vec<f64>,
    pub p: Vec<f64>,
    pub l: CMat,
}

/// Time derivative of a [`ReducedState`].
#[derive(Clone, Debug)]
pub struct ReducedDerivative {
    pub dx: Vec<f64>,
    pub dp: Vec<f64>,
    pub dl: CMat,
}

/// Integration options.
#[derive(Clone, Copy, Debug)]
pub struct FlowOptions {
    /// Harmonic frequency; `0` is the free flow.
    pub omega: f64,
    /// Abort when two positions come closer than this.
    pub collision_gap: f64,
}

impl Default for FlowOptions {
    fn default() -> Self {
        Self { omega: 0.0, collision_gap: 1e-6 }
    }
}

fn gaussian_hermitian(class: SymmetryClass, rng: &mut ChaCha8Rng) -> CMat {
    let n = class.n();
    let mut m = CMat::zeros(n, n);
    let off = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..n {
        let d: f64 = StandardNormal.sample(rng);
        m[(i, i)] = Complex64::new(d, 0.0);
        for j in (i + 1)..n {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = if class.is_unitary() { StandardNormal.sample(rng) } else { 0.0 };
            let z = Complex64::new(re * off, im * off);
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

fn min_gap(sorted: &[f64]) -> f64 {
    sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min)
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn spectrum(m: &CMat) -> Result<Vec<f64>> {
    Ok(hermitian_eig(m, DEFAULT_EIG_TOL)?.values)
}

/// Seeded Gaussian `(X, Y)`, resampled until the spectral gap of `X`
/// exceeds `gap`. Orthogonal draws are exactly real.
pub fn sample_free_state(class: SymmetryClass, seed: u64, gap: f64) -> Result<FreeState> {
    if !(gap > 0.0) {
        return Err(Error::InvalidArgument(format!("gap = {gap} must be positive")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_CAP {
        let x = gaussian_hermitian(class, &mut rng);
        let y = gaussian_hermitian(class, &mut rng);
        if min_gap(&spectrum(&x)?) > gap {
            return Ok(FreeState { class, x, y });
        }
    }
    Err(Error::ResampleCap(RESAMPLE_CAP))
}

/// Exact free flow `(X + tY, Y)`.
pub fn free_evolve(s: &FreeState, t: f64) -> FreeState {
    FreeState { class: s.class, x: &s.x + &s.y * Complex64::new(t, 0.0), y: s.y.clone() }
}

/// Exact flow of `H = ½Tr Y² + ½ω² Tr X²`.
pub fn free_evolve_harmonic(s: &FreeState, t: f64, omega: f64) -> FreeState {
    if omega == 0.0 {
        return free_evolve(s, t);
    }
    let (c, sn) = ((omega * t).cos(), (omega * t).sin());
    FreeState {
        class: s.class,
        x: &s.x * Complex64::new(c, 0.0) + &s.y * Complex64::new(sn / omega, 0.0),
        y: &s.y * Complex64::new(c, 0.0) - &s.x * Complex64::new(omega * sn, 0.0),
    }
}

/// Free-side energy `½Tr Y² + ½ω² Tr X²`.
pub fn free_energy(s: &FreeState, omega: f64) -> f64 {
    0.5 * (&s.y * &s.y).trace().re + 0.5 * omega * omega * (&s.x * &s.x).trace().re
}

/// Diagonalize `X` and express `Y` in the diagonal frame.
pub fn reduce(s: &FreeState, eps: f64) -> Result<ReducedState> {
    let n = s.class.n();
    let (x, v) = if s.class.is_unitary() {
        let e = hermitian_eig(&s.x, DEFAULT_EIG_TOL)?;
        let v = e.vectors.adjoint() * &s.y * &e.vectors;
        (e.values, v)
    } else {
        let xr: Mat = s.x.map(|z| z.re);
        let yr: Mat = s.y.map(|z| z.re);
        let e = sym_eig(&xr, DEFAULT_EIG_TOL)?;
        let v = e.vectors.transpose() * yr * &e.vectors;
        (e.values, v.map(|r| Complex64::new(r, 0.0)))
    };
    let gap = min_gap(&x);
    if gap < eps {
        return Err(Error::Degenerate { gap, threshold: eps });
    }
    let p = (0..n).map(|i| v[(i, i)].re).collect();
    let l = CMat::from_fn(n, n, |i, j| v[(i, j)] * (x[i] - x[j]));
    Ok(ReducedState { class: s.class, x, p, l })
}

impl ReducedState {
    /// `H = ½Σp² − ½Σ_{i≠j} L_ij L_ji/(x_i − x_j)² + ½ω²Σx²`.
    pub fn hamiltonian(&self, omega: f64) -> f64 {
        let n = self.x.len();
        let mut h = 0.5 * self.p.iter().map(|p| p * p).sum::<f64>();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let d = self.x[i] - self.x[j];
                    h -= 0.5 * (self.l[(i, j)] * self.l[(j, i)]).re / (d * d);
                }
            }
        }
        h + 0.5 * omega * omega * self.x.iter().map(|x| x * x).sum::<f64>()
    }

    pub fn total_momentum(&self) -> f64 {
        self.p.iter().sum()
    }

    /// `Tr L²` (real, non-positive).
    pub fn tr_l2(&self) -> f64 {
        (&self.l * &self.l).trace().re
    }

    fn min_gap(&self) -> f64 {
        min_gap(&self.x)
    }
}

/// Right-hand side of the reduced equations of motion.
pub fn reduced_rhs(s: &ReducedState, omega: f64) -> Result<ReducedDerivative> {
    let n = s.x.len();
    for i in 0..n {
        for k in (i + 1)..n {
            if s.x[i] == s.x[k] {
                return Err(Error::CollisionMargin(format!("x_{} = x_{}", i + 1, k + 1)));
            }
        }
    }
    Ok(rhs_unchecked(&s.x, &s.p, &s.l, omega))
}

fn rhs_unchecked(x: &[f64], p: &[f64], l: &CMat, omega: f64) -> ReducedDerivative {
    let n = x.len();
    let mut inv2 = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            if i != k {
                let d = x[i] - x[k];
                inv2[i * n + k] = 1.0 / (d * d);
            }
        }
    }
    let dx = p.to_vec();
    let mut dp = vec![0.0; n];
    for i in 0..n {
        for k in 0..n {
            if k != i {
                let d = x[i] - x[k];
                dp[i] -= 2.0 * (l[(i, k)] * l[(k, i)]).re * inv2[i * n + k] / d;
            }
        }
        dp[i] -= omega * omega * x[i];
    }
    let mut dl = CMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                if k != i && k != j {
                    acc += l[(i, k)] * l[(k, j)] * (inv2[i * n + k] - inv2[j * n + k]);
                }
            }
            dl[(i, j)] = acc;
        }
    }
    ReducedDerivative { dx, dp, dl }
}

// Packed layout: x, p, then L over i<j (orthogonal, real) or i≠j (unitary, re/im).
fn pack(s: &ReducedState) -> Vec<f64> {
    let n = s.x.len();
    let mut y = Vec::with_capacity(2 * n + 2 * n * n);
    y.extend_from_slice(&s.x);
    y.extend_from_slice(&s.p);
    pack_l(s.class, &s.l, &mut y);
    y
}

fn pack_l(class: SymmetryClass, l: &CMat, y: &mut Vec<f64>) {
    for (i, j) in class.pairs() {
        y.push(l[(i, j)].re);
        if class.is_unitary() {
            y.push(l[(i, j)].im);
        }
    }
}

fn unpack(class: SymmetryClass, y: &[f64]) -> (Vec<f64>, Vec<f64>, CMat) {
    let n = class.n();
    let x = y[..n].to_vec();
    let p = y[n..2 * n].to_vec();
    let mut l = CMat::zeros(n, n);
    let mut k = 2 * n;
    for (i, j) in class.pairs() {
        if class.is_unitary() {
            l[(i, j)] = Complex64::new(y[k], y[k + 1]);
            k += 2;
        } else {
            l[(i, j)] = Complex64::new(y[k], 0.0);
            l[(j, i)] = Complex64::new(-y[k], 0.0);
            k += 1;
        }
    }
    (x, p, l)
}

/// Conserved-quantity drift `max_t |Q(t) − Q(0)|` along a trajectory.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct DriftReport {
    pub hamiltonian: f64,
    pub momentum: f64,
    pub tr_l2: f64,
}

/// One sample of a trajectory.
#[derive(Clone, Debug, Serialize)]
pub struct TrajectoryPoint {
    pub t: f64,
    pub x: Vec<f64>,
    pub p: Vec<f64>,
    pub h: f64,
    pub tr_l2: f64,
}

/// Integrate the reduced equations with RK4 over `[0, t]` in `steps` steps.
pub fn integrate_reduced(
    s: &ReducedState,
    t: f64,
    steps: usize,
    opts: FlowOptions,
) -> Result<(ReducedState, DriftReport)> {
    integrate_reduced_observed(s, t, steps, opts, |_, _| Ok(()))
}

/// [`integrate_reduced`] with an observer called after every step with
/// `(step, point)`.
pub fn integrate_reduced_observed<O>(
    s: &ReducedState,
    t: f64,
    steps: usize,
    opts: FlowOptions,
    mut observe: O,
) -> Result<(ReducedState, DriftReport)>
where
    O: FnMut(usize, &TrajectoryPoint) -> Result<()>,
{
    let class = s.class;
    let h0 = s.hamiltonian(opts.omega);
    let p0 = s.total_momentum();
    let l0 = s.tr_l2();
    let mut drift = DriftReport::default();
    let rhs = |_t: f64, y: &[f64], dy: &mut [f64]| {
        let (x, p, l) = unpack(class, y);
        let d = rhs_unchecked(&x, &p, &l, opts.omega);
        let n = x.len();
        dy[..n].copy_from_slice(&d.dx);
        dy[n..2 * n].copy_from_slice(&d.dp);
        let mut tail = Vec::with_capacity(dy.len() - 2 * n);
        pack_l(class, &d.dl, &mut tail);
        dy[2 * n..].copy_from_slice(&tail);
    };
    let y = rk4_observed(rhs, &pack(s), 0.0, t, steps, |step, time, y| {
        let (x, p, l) = unpack(class, y);
        let st = ReducedState { class, x, p, l };
        let gap = st.min_gap();
        if gap < opts.collision_gap {
            return Err(Error::Collision { t: time, gap });
        }
        let point = TrajectoryPoint {
            t: time,
            h: st.hamiltonian(opts.omega),
            tr_l2: st.tr_l2(),
            x: st.x,
            p: st.p,
        };
        drift.hamiltonian = drift.hamiltonian.max((point.h - h0).abs());
        drift.momentum = drift.momentum.max((point.p.iter().sum::<f64>() - p0).abs());
        drift.tr_l2 = drift.tr_l2.max((point.tr_l2 - l0).abs());
        observe(step, &point)
    })?;
    let (x, p, l) = unpack(class, &y);
    Ok((ReducedState { class, x, p, l }, drift))
}

/// Outcome of [`cross_check`].
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    /// `(t_k, max_i |x_i^free(t_k) − x_i^reduced(t_k)|)`.
    pub samples: Vec<(f64, f64)>,
    pub max_discrepancy: f64,
    pub drift: DriftReport,
    pub tol: f64,
    pub pass: bool,
}

/// Compare the spectrum of the exact free flow with the RK4-integrated
/// reduced positions at `samples` equally spaced times in `(0, t]`.
pub fn cross_check(
    s0: &FreeState,
    t: f64,
    steps: usize,
    samples: usize,
    opts: FlowOptions,
    tol: f64,
) -> Result<CrossCheckReport> {
    let samples = samples.clamp(1, steps.max(1));
    let every = (steps / samples).max(1);
    let r0 = reduce(s0, DEFAULT_GAP)?;
    let mut rows = Vec::new();
    let (_, drift) = integrate_reduced_observed(&r0, t, steps, opts, |step, pt| {
        if step > 0 && (step % every == 0 || step == steps) {
            let exact = spectrum(&free_evolve_harmonic(s0, pt.t, opts.omega).x)?;
            let disc = exact.iter().zip(&pt.x).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            if rows.last().map(|&(tt, _)| tt != pt.t).unwrap_or(true) {
                rows.push((pt.t, disc));
            }
        }
        Ok(())
    })?;
    let max_discrepancy = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    Ok(CrossCheckReport { samples: rows, max_discrepancy, drift, tol, pass: max_discrepancy < tol })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_particles_have_no_spin_dynamics() {
        let s = sample_free_state(SymmetryClass::unitary(2), 3, 0.1).unwrap();
        let r = reduce(&s, DEFAULT_GAP).unwrap();
        let d = reduced_rhs(&r, 0.0).unwrap();
        assert_eq!(d.dl[(0, 1)], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn free_particles_when_l_vanishes() {
        let class = SymmetryClass::orthogonal(3);
        let r = ReducedState { class, x: vec![0.0, 1.0, 3.0], p: vec![0.5, -0.2, 0.1], l: CMat::zeros(3, 3) };
        let d = reduced_rhs(&r, 0.0).unwrap();
        assert!(d.dp.iter().all(|&v| v == 0.0));
        let (end, _) = integrate_reduced(&r, 1.0, 10, FlowOptions::default()).unwrap();
        for i in 0..3 {
            assert!((end.x[i] - (r.x[i] + r.p[i])).abs() < 1e-14);
        }
    }

    #[test]
    fn coincident_positions_rejected() {
        let class = SymmetryClass::orthogonal(2);
        let r = ReducedState { class, x: vec![1.0, 1.0], p: vec![0.0, 0.0], l: CMat::zeros(2, 2) };
        assert!(reduced_rhs(&r, 0.0).is_err());
    }
}
