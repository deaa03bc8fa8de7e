//! Separation of the component Hamiltonian
//!
//! ```text
//! H_I = Σ_i (−½ ∂²_{D_i} + ω²/2 D_i²) + α/4 (Σ_{i≠I} Δ_{Ii}⁻² + (α−2) Σ_{i<j} Δ_{ij}⁻²)
//! ```
//!
//! (ħ = m = 1) in Jacobi coordinates: centre of mass `R`, hyperradius
//! `r = √(Σ_{i<j} Δ_{ij}² / N)` and angles on `S^{N−2}`, with
//! `ψ = 𝓡(R) ρ(r) Φ(φ)` and `E = E_R + E_r`.
//!
//! For `N = 3` the single angle is shifted so that the potential takes the
//! textbook placement: `−1/(4 sin²φ)` (orthogonal) or
//! `½/sin²φ + ½/sin²(φ − 2π/3)` (unitary), singular at `0, 2π/3, π, 5π/3`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::angular3::{
    orthogonal_sector_matrix, solve_modes, unitary_sector_matrix_with_coupling, mode_with_label, AngularMode,
    Parity, Sector, Segment,
};
use crate::liealg::ClassKind;
use crate::numerics::{bessel_j, hermite, laguerre, rk4};
use crate::{Error, Mat, Result};

/// Raw-to-shifted angle offset for `N = 3`, repulsive particle `I = 3`.
pub const ORTHOGONAL_SHIFT: f64 = FRAC_PI_2;
/// See [`ORTHOGONAL_SHIFT`].
pub const UNITARY_SHIFT: f64 = FRAC_PI_6;
/// Unitary coupling produced by the component Hamiltonian.
pub const UNITARY_COUPLING: f64 = 0.5;
/// Residual patches keep every interacting pair gap above this fraction of `r`.
pub const COLLISION_MARGIN: f64 = 0.2;
/// RK4 steps used to continue an angular mode from the patch centre.
pub const CONTINUATION_STEPS: usize = 48;

fn alpha(class: ClassKind) -> f64 {
    match class {
        ClassKind::Orthogonal => 1.0,
        ClassKind::Unitary => 2.0,
    }
}

/// Orthogonal map `D = M (x₁, …, x_{N−1}, √N R)` onto Jacobi coordinates.
#[derive(Clone, Debug)]
pub struct JacobiChart {
    n: usize,
    m: Mat,
}

/// `(R, r, φ₁, …, φ_{N−2})`. All angles lie in `[0, π]` except the last,
/// which lies in `[0, 2π)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InternalCoords {
    pub com: f64,
    pub r: f64,
    pub angles: Vec<f64>,
}

pub fn jacobi_chart(n: usize) -> Result<JacobiChart> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("jacobi_chart: N = {n} below 2")));
    }
    let mut m = Mat::zeros(n, n);
    for j in 1..n {
        let norm = ((j * (j + 1)) as f64).sqrt();
        for i in 0..j {
            m[(i, j - 1)] = 1.0 / norm;
        }
        m[(j, j - 1)] = -(j as f64) / norm;
    }
    for i in 0..n {
        m[(i, n - 1)] = 1.0 / (n as f64).sqrt();
    }
    Ok(JacobiChart { n, m })
}

impl JacobiChart {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Mat {
        &self.m
    }

    /// `max |MᵀM − 1|`.
    pub fn orthogonality_residual(&self) -> f64 {
        let g = self.m.transpose() * &self.m;
        (g - Mat::identity(self.n, self.n)).amax()
    }

    /// Jacobi vector `(x₁, …, x_{N−1})` and `R`.
    pub fn jacobi_coordinates(&self, d: &[f64]) -> Result<(Vec<f64>, f64)> {
        if d.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: d.len() });
        }
        let y = self.m.transpose() * nalgebra::DVector::from_column_slice(d);
        Ok((y.as_slice()[..self.n - 1].to_vec(), y[self.n - 1] / (self.n as f64).sqrt()))
    }

    fn need_angles(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidArgument(format!("N = {} has no angles on S^(N-2)", self.n)));
        }
        Ok(())
    }

    pub fn to_internal(&self, d: &[f64]) -> Result<InternalCoords> {
        self.need_angles()?;
        let (x, com) = self.jacobi_coordinates(d)?;
        let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        let scale = d.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(f64::MIN_POSITIVE);
        if r <= 1e-14 * scale {
            return Err(Error::InvalidArgument("to_internal: r = 0, angles undefined".into()));
        }
        let k = x.len();
        let mut angles = Vec::with_capacity(k - 1);
        for i in 0..k - 2 {
            let tail = x[i + 1..].iter().map(|v| v * v).sum::<f64>().sqrt();
            angles.push(tail.atan2(x[i]));
        }
        let last = x[k - 1].atan2(x[k - 2]);
        angles.push(if last < 0.0 { last + 2.0 * PI } else { last });
        Ok(InternalCoords { com, r, angles })
    }

    pub fn from_internal(&self, p: &InternalCoords) -> Result<Vec<f64>> {
        self.need_angles()?;
        if p.angles.len() != self.n - 2 {
            return Err(Error::DimensionMismatch { expected: self.n - 2, got: p.angles.len() });
        }
        if !(p.r > 0.0) {
            return Err(Error::InvalidArgument(format!("from_internal: r = {} must be positive", p.r)));
        }
        let mut y = Vec::with_capacity(self.n);
        let mut prod = p.r;
        for &a in &p.angles {
            y.push(prod * a.cos());
            prod *= a.sin();
        }
        y.push(prod);
        y.push((self.n as f64).sqrt() * p.com);
        let d = &self.m * nalgebra::DVector::from_vec(y);
        Ok(d.as_slice().to_vec())
    }

    /// Pull-back of `Σ dD_i²` to `(R, r, angles)` by central differences.
    pub fn pullback_metric(&self, p: &InternalCoords, h: f64) -> Result<Mat> {
        let k = self.n;
        let mut jac = Mat::zeros(k, k);
        for c in 0..k {
            let bump = |s: f64| {
                let mut q = p.clone();
                match c {
                    0 => q.com += s,
                    1 => q.r += s,
                    _ => q.angles[c - 2] += s,
                }
                q
            };
            let plus = self.from_internal(&bump(h))?;
            let minus = self.from_internal(&bump(-h))?;
            for i in 0..k {
                jac[(i, c)] = (plus[i] - minus[i]) / (2.0 * h);
            }
        }
        Ok(jac.transpose() * jac)
    }
}

/// `r = √(Σ_{i<j} (D_i − D_j)² / N)`.
pub fn hyperradius(d: &[f64]) -> f64 {
    let n = d.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += (d[i] - d[j]).powi(2);
        }
    }
    (s / n as f64).sqrt()
}

fn pair_weight(alpha: f64, i_rep: usize, i: usize, j: usize) -> f64 {
    let touches = if i == i_rep || j == i_rep { 1.0 } else { 0.0 };
    touches + (alpha - 2.0)
}

/// `f_{α,I}` from positions: `Σ_{k≠I} (r/Δ_{Ik})² + (α−2) Σ_{i<j} (r/Δ_{ij})²`.
/// `i_rep` is 0-based.
pub fn potential_from_positions(class: ClassKind, i_rep: usize, d: &[f64]) -> Result<f64> {
    let n = d.len();
    if i_rep >= n {
        return Err(Error::InvalidArgument(format!("repulsive index {i_rep} out of range for N = {n}")));
    }
    let r = hyperradius(d);
    let a = alpha(class);
    let mut f = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let w = pair_weight(a, i_rep, i, j);
            if w == 0.0 {
                continue;
            }
            let q = (d[i] - d[j]) / r;
            if q.abs() < 1e-9 {
                return Err(Error::CollisionMargin(format!("particles {} and {} coincide", i + 1, j + 1)));
            }
            f += w / (q * q);
        }
    }
    Ok(f)
}

/// `f_{α,I}` at the given (raw) angles, through [`JacobiChart::from_internal`]
/// at `r = 1`.
pub fn angular_potential(class: ClassKind, i_rep: usize, angles: &[f64]) -> Result<f64> {
    let chart = jacobi_chart(angles.len() + 2)?;
    let d = chart.from_internal(&InternalCoords { com: 0.0, r: 1.0, angles: angles.to_vec() })?;
    potential_from_positions(class, i_rep, &d)
}

/// Raw `N = 3` angles in `[0, 2π)` where `f_{α,I}` is singular: scan
/// `1/|f|` for near-zero minima and refine by golden section.
pub fn locate_singularities(class: ClassKind, i_rep: usize, samples: usize) -> Result<Vec<f64>> {
    let g = |phi: f64| match angular_potential(class, i_rep, &[phi]) {
        Ok(f) => 1.0 / f.abs(),
        Err(_) => 0.0,
    };
    let step = 2.0 * PI / samples as f64;
    let vals: Vec<f64> = (0..samples).map(|i| g(i as f64 * step)).collect();
    let mut out = Vec::new();
    for i in 0..samples {
        let (prev, next) = (vals[(i + samples - 1) % samples], vals[(i + 1) % samples]);
        if vals[i] <= prev && vals[i] < next && vals[i] < 0.05 {
            let (mut a, mut b) = ((i as f64 - 1.0) * step, (i as f64 + 1.0) * step);
            let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
            let (mut c, mut d) = (b - inv_phi * (b - a), a + inv_phi * (b - a));
            while b - a > 1e-12 {
                if g(c) < g(d) {
                    b = d;
                } else {
                    a = c;
                }
                c = b - inv_phi * (b - a);
                d = a + inv_phi * (b - a);
            }
            out.push((0.5 * (a + b)).rem_euclid(2.0 * PI));
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Smallest singular angle that opens a widest gap: it is mapped to `φ = 0`.
pub fn shift_from_singularities(sing: &[f64]) -> Result<f64> {
    if sing.is_empty() {
        return Err(Error::InvalidArgument("no singularities".into()));
    }
    let gap = |i: usize| {
        let next = if i + 1 < sing.len() { sing[i + 1] } else { sing[0] + 2.0 * PI };
        next - sing[i]
    };
    let widest = (0..sing.len()).map(gap).fold(0.0, f64::max);
    let i = (0..sing.len()).find(|&i| gap(i) > widest - 1e-6).expect("non-empty");
    Ok(sing[i])
}

/// Frozen shift for `N = 3`; only the last particle as the repulsive one
/// is tabulated.
pub fn angle_shift(class: ClassKind, i_rep: usize) -> Result<f64> {
    if i_rep != 2 {
        return Err(Error::InvalidArgument(format!("no frozen angle shift for repulsive particle {}", i_rep + 1)));
    }
    Ok(match class {
        ClassKind::Orthogonal => ORTHOGONAL_SHIFT,
        ClassKind::Unitary => UNITARY_SHIFT,
    })
}

/// Angular-equation potential `(α/2) f_{α,I}` at shifted angle `φ`.
pub fn shifted_potential(class: ClassKind, i_rep: usize, phi: f64) -> Result<f64> {
    let shift = angle_shift(class, i_rep)?;
    Ok(0.5 * alpha(class) * angular_potential(class, i_rep, &[phi + shift])?)
}

/// Radial regime.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Regime {
    Free { k: f64 },
    Harmonic { nu: usize, omega: f64 },
}

impl Regime {
    pub fn omega(&self) -> f64 {
        match *self {
            Regime::Free { .. } => 0.0,
            Regime::Harmonic { omega, .. } => omega,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Regime::Free { .. } => "free",
            Regime::Harmonic { .. } => "harmonic",
        }
    }
}

/// Hyperradial factor `ρ(r)` with order `a = √(b² + ((N−3)/2)²)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RadialFactor {
    pub n: usize,
    pub b: f64,
    pub a: f64,
    pub regime: Regime,
    pub energy: f64,
}

pub fn radial_factor(n: usize, b: f64, regime: Regime) -> Result<RadialFactor> {
    if !(b >= 0.0) {
        return Err(Error::InvalidArgument(format!("radial_factor: b = {b} must be ≥ 0")));
    }
    if n < 2 {
        return Err(Error::InvalidArgument(format!("radial_factor: N = {n}")));
    }
    let shift = 0.5 * (n as f64 - 3.0);
    let a = if n == 3 { b } else { (b * b + shift * shift).sqrt() };
    let energy = match regime {
        Regime::Free { k } => 0.5 * k * k,
        Regime::Harmonic { nu, omega } => {
            if !(omega > 0.0) {
                return Err(Error::InvalidArgument(format!("harmonic ω = {omega} must be positive")));
            }
            omega * (2.0 * nu as f64 + a + 1.0)
        }
    };
    Ok(RadialFactor { n, b, a, regime, energy })
}

impl RadialFactor {
    /// Oscillator length `1/√ω` (harmonic only).
    pub fn osc_len(&self) -> Option<f64> {
        match self.regime {
            Regime::Harmonic { omega, .. } => Some(1.0 / omega.sqrt()),
            Regime::Free { .. } => None,
        }
    }

    pub fn profile(&self, r: f64) -> Result<f64> {
        let lead = -0.5 * (self.n as f64 - 3.0);
        match self.regime {
            Regime::Free { k } => Ok(r.powf(lead) * bessel_j(self.a, k * r)?),
            Regime::Harmonic { nu, .. } => {
                let l = self.osc_len().expect("harmonic");
                let z = (r / l).powi(2);
                Ok(r.powf(self.a + lead) * (-0.5 * z).exp() * laguerre(nu, self.a, z)?)
            }
        }
    }
}

/// Centre-of-mass regime: `e^{iKR}` with `E_R = K²/(2N)`, or the oscillator
/// state `n` with `E_R = ω(n + ½)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ComRegime {
    Free { k: f64 },
    Harmonic { n: usize, omega: f64 },
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ComFactor {
    pub n_particles: usize,
    pub regime: ComRegime,
    pub energy: f64,
}

pub fn com_factor(n_particles: usize, regime: ComRegime) -> Result<ComFactor> {
    if n_particles < 1 {
        return Err(Error::InvalidArgument("com_factor: no particles".into()));
    }
    let energy = match regime {
        ComRegime::Free { k } => k * k / (2.0 * n_particles as f64),
        ComRegime::Harmonic { n, omega } => {
            if !(omega > 0.0) {
                return Err(Error::InvalidArgument(format!("harmonic ω = {omega} must be positive")));
            }
            omega * (n as f64 + 0.5)
        }
    };
    Ok(ComFactor { n_particles, regime, energy })
}

impl ComFactor {
    pub fn omega(&self) -> f64 {
        match self.regime {
            ComRegime::Free { .. } => 0.0,
            ComRegime::Harmonic { omega, .. } => omega,
        }
    }

    pub fn profile(&self, r_cm: f64) -> Result<Complex64> {
        match self.regime {
            ComRegime::Free { k } => Ok(Complex64::from_polar(1.0, k * r_cm)),
            ComRegime::Harmonic { n, omega } => {
                let y = (self.n_particles as f64 * omega).sqrt() * r_cm;
                Ok(Complex64::new((-0.5 * y * y).exp() * hermite(n, y)?, 0.0))
            }
        }
    }
}

/// Cubic patch of `points³` nodes centred on `centre` (shifted angle),
/// half-width `half_width · r`.
#[derive(Clone, Debug, Serialize)]
pub struct GridSpec {
    pub centre: InternalCoords,
    pub points: usize,
    pub half_width: f64,
}

impl GridSpec {
    /// The default `20³` patch at `R = 0.2`, `r = 1.5` and shifted angle `phi`.
    pub fn standard(phi: f64) -> Self {
        Self { centre: InternalCoords { com: 0.2, r: 1.5, angles: vec![phi] }, points: 20, half_width: 0.05 }
    }
}

/// Outcome of [`assemble_and_residual`].
#[derive(Clone, Debug, Serialize)]
pub struct ResidualReport {
    pub class: ClassKind,
    #[serde(rename = "I")]
    pub i_rep: usize,
    pub l: usize,
    pub regime: String,
    pub grid: usize,
    pub h: f64,
    pub residual: f64,
    pub energy: f64,
}

/// Interaction `α/4 (Σ_{i≠I} Δ_{Ii}⁻² + (α−2) Σ_{i<j} Δ_{ij}⁻²)`.
pub fn interaction(class: ClassKind, i_rep: usize, d: &[f64]) -> Result<f64> {
    let r = hyperradius(d);
    Ok(0.25 * alpha(class) * potential_from_positions(class, i_rep, d)? / (r * r))
}

fn segment_of(sector: Sector) -> (f64, f64) {
    match sector {
        Sector::Orthogonal(_) => (0.0, PI),
        Sector::Unitary(s, _) => s.range(),
    }
}

/// Angular solution through `(φ₀, Φ(φ₀), Φ'(φ₀))` of
/// `Φ'' = ((α/2) f − b²) Φ`, with the initial data from the mode's series.
struct ContinuedMode {
    class: ClassKind,
    i_rep: usize,
    b2: f64,
    phi0: f64,
    y0: [f64; 2],
}

impl ContinuedMode {
    fn new(class: ClassKind, i_rep: usize, mode: &AngularMode, phi0: f64) -> Self {
        Self { class, i_rep, b2: mode.b2, phi0, y0: [mode.evaluate(phi0), mode.derivative(phi0)] }
    }

    fn value(&self, phi: f64) -> Result<f64> {
        if phi == self.phi0 {
            return Ok(self.y0[0]);
        }
        let mut err = None;
        let y = rk4(
            |t, y, dy| {
                let v = shifted_potential(self.class, self.i_rep, t).unwrap_or_else(|e| {
                    err.get_or_insert(e);
                    0.0
                });
                dy[0] = y[1];
                dy[1] = (v - self.b2) * y[0];
            },
            &self.y0,
            self.phi0,
            phi,
            CONTINUATION_STEPS,
        )?;
        match err {
            Some(e) => Err(e),
            None => Ok(y[0]),
        }
    }
}

/// Assemble `ψ_I = 𝓡(R) ρ(r) Φ_I(φ)` for `N = 3` and return the relative
/// residual `max |(H_I − E)ψ| / max |Eψ|` of a central-difference
/// Laplacian with step `h` over the patch. `Φ_I` is the mode continued by
/// RK4 from the patch centre.
pub fn assemble_and_residual(
    class: ClassKind,
    i_rep: usize,
    mode: &AngularMode,
    radial: &RadialFactor,
    com: &ComFactor,
    grid: &GridSpec,
    h: f64,
) -> Result<ResidualReport> {
    if radial.n != 3 || com.n_particles != 3 {
        return Err(Error::InvalidArgument("assemble_and_residual needs N = 3".into()));
    }
    if mode.sector.class() != class {
        return Err(Error::InvalidArgument(format!("mode belongs to the {} class", mode.sector.class())));
    }
    if (radial.b - mode.b).abs() > 1e-12 {
        return Err(Error::InvalidArgument(format!("radial b = {} differs from the mode's b = {}", radial.b, mode.b)));
    }
    let omega = radial.regime.omega();
    if com.omega() != omega {
        return Err(Error::InvalidArgument("centre-of-mass and radial ω differ".into()));
    }
    if !(h > 0.0) || grid.points < 3 {
        return Err(Error::InvalidArgument(format!("bad grid: h = {h}, points = {}", grid.points)));
    }
    let chart = jacobi_chart(3)?;
    let shift = angle_shift(class, i_rep)?;
    let phi0 = grid.centre.angles[0];
    let (lo, hi) = segment_of(mode.sector);
    let angular = ContinuedMode::new(class, i_rep, mode, phi0);
    let centre = chart.from_internal(&InternalCoords { angles: vec![phi0 + shift], ..grid.centre.clone() })?;
    let w = grid.half_width * grid.centre.r;
    let energy = com.energy + radial.energy;

    let psi = |d: &[f64]| -> Result<Complex64> {
        let p = chart.to_internal(d)?;
        let phi = (p.angles[0] - shift).rem_euclid(2.0 * PI);
        if phi <= lo || phi >= hi {
            return Err(Error::CollisionMargin(format!("angle {phi} leaves the mode's segment")));
        }
        Ok(com.profile(p.com)? * radial.profile(p.r)? * angular.value(phi)?)
    };

    let g = grid.points;
    let mut max_res: f64 = 0.0;
    let mut max_e: f64 = 0.0;
    for i in 0..g {
        for j in 0..g {
            for k in 0..g {
                let t = |q: usize| -w + 2.0 * w * q as f64 / (g - 1) as f64;
                let d = [centre[0] + t(i), centre[1] + t(j), centre[2] + t(k)];
                let r = hyperradius(&d);
                for a in 0..3 {
                    for b in a + 1..3 {
                        // only interacting pairs are singular
                        if pair_weight(alpha(class), i_rep, a, b) != 0.0 && (d[a] - d[b]).abs() <= COLLISION_MARGIN * r {
                            return Err(Error::CollisionMargin(format!(
                                "grid point {d:?} has |D{} − D{}| below {COLLISION_MARGIN}·r",
                                a + 1,
                                b + 1
                            )));
                        }
                    }
                }
                let p0 = psi(&d)?;
                let mut lap = Complex64::new(0.0, 0.0);
                for axis in 0..3 {
                    let mut up = d;
                    let mut dn = d;
                    up[axis] += h;
                    dn[axis] -= h;
                    lap += (psi(&up)? - 2.0 * p0 + psi(&dn)?) / (h * h);
                }
                let harmonic = 0.5 * omega * omega * d.iter().map(|x| x * x).sum::<f64>();
                let h_psi = -0.5 * lap + (harmonic + interaction(class, i_rep, &d)?) * p0;
                max_res = max_res.max((h_psi - energy * p0).norm());
                max_e = max_e.max((energy * p0).norm());
            }
        }
    }
    Ok(ResidualReport {
        class,
        i_rep: i_rep + 1,
        l: mode.l,
        regime: radial.regime.name().to_string(),
        grid: g,
        h,
        residual: max_res / max_e,
        energy,
    })
}

/// Stencil control: `ψ = exp(i k·D)` under `−½Δ` alone, `E = ½|k|²`.
pub fn plane_wave_residual(k: [f64; 3], centre: [f64; 3], points: usize, half_width: f64, h: f64) -> Result<f64> {
    if points < 2 || !(h > 0.0) {
        return Err(Error::InvalidArgument("bad control grid".into()));
    }
    let psi = |d: [f64; 3]| Complex64::from_polar(1.0, k[0] * d[0] + k[1] * d[1] + k[2] * d[2]);
    let energy = 0.5 * (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    let (mut max_res, mut max_e): (f64, f64) = (0.0, 0.0);
    let t = |q: usize| -half_width + 2.0 * half_width * q as f64 / (points - 1) as f64;
    for i in 0..points {
        for j in 0..points {
            for l in 0..points {
                let d = [centre[0] + t(i), centre[1] + t(j), centre[2] + t(l)];
                let p0 = psi(d);
                let mut lap = Complex64::new(0.0, 0.0);
                for axis in 0..3 {
                    let (mut up, mut dn) = (d, d);
                    up[axis] += h;
                    dn[axis] -= h;
                    lap += (psi(up) - 2.0 * p0 + psi(dn)) / (h * h);
                }
                max_res = max_res.max((-0.5 * lap - energy * p0).norm());
                max_e = max_e.max((energy * p0).norm());
            }
        }
    }
    Ok(max_res / max_e)
}

/// Angular mode used by the residual check: the orthogonal block of `l`'s
/// parity, or the unitary low/high block at the Hamiltonian's coupling ½
/// with exact integrals.
pub fn residual_mode(class: ClassKind, segment: Segment, l: usize, dim: usize) -> Result<AngularMode> {
    let parity = Parity::of(l);
    let problem = match class {
        ClassKind::Orthogonal => orthogonal_sector_matrix(parity, dim)?,
        ClassKind::Unitary => unitary_sector_matrix_with_coupling(segment, parity, dim, true, UNITARY_COUPLING)?,
    };
    Ok(mode_with_label(&solve_modes(&problem)?, l)?.clone())
}

/// Centre of a mode's segment (shifted angle).
pub fn segment_centre(class: ClassKind, segment: Segment) -> f64 {
    match class {
        ClassKind::Orthogonal => FRAC_PI_2,
        ClassKind::Unitary => {
            let (a, b) = segment.range();
            0.5 * (a + b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_chart() {
        let c = jacobi_chart(2).unwrap();
        let s = 0.5f64.sqrt();
        let want = Mat::from_row_slice(2, 2, &[s, s, -s, s]);
        assert!((c.matrix() - want).amax() < 1e-15);
        assert!(c.to_internal(&[1.0, 2.0]).is_err());
    }

    #[test]
    fn hyperradius_example() {
        let c = jacobi_chart(3).unwrap();
        let p = c.to_internal(&[-1.0, 0.0, 1.0]).unwrap();
        assert!(p.com.abs() < 1e-15);
        assert!((p.r - 2f64.sqrt()).abs() < 1e-15);
        assert!(c.to_internal(&[0.7, 0.7, 0.7]).is_err());
    }

    #[test]
    fn energies() {
        assert_eq!(radial_factor(3, 1.0, Regime::Harmonic { nu: 0, omega: 1.0 }).unwrap().energy, 2.0);
        assert_eq!(radial_factor(3, 0.37, Regime::Free { k: 1.0 }).unwrap().a, 0.37);
        assert!(radial_factor(3, -0.1, Regime::Free { k: 1.0 }).is_err());
        assert_eq!(com_factor(3, ComRegime::Harmonic { n: 0, omega: 2.0 }).unwrap().energy, 1.0);
        assert_eq!(com_factor(3, ComRegime::Harmonic { n: 2, omega: 1.0 }).unwrap().energy, 2.5);
        let free = com_factor(3, ComRegime::Free { k: 0.0 }).unwrap();
        assert_eq!(free.energy, 0.0);
        assert_eq!(free.profile(1.3).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn orthogonal_potential_at_quarter_turn() {
        let v = shifted_potential(ClassKind::Orthogonal, 2, FRAC_PI_2).unwrap();
        assert!((v + 0.25).abs() < 1e-13);
    }
}
