//! Two-particle reduction: free plane waves `exp(i Tr(K X))` projected onto
//! angular modes.
//!
//! With `X = R·1 + (r/2) U† σ_z U`, `K = ½(tr K)·1 + k`, the plane wave
//! factorizes into `exp(i trK R)` and a relative part. Orthogonal (SO(2),
//! doubled angle `Φ`):
//!
//! ```text
//! ψ_ν(r) = ∫₀^{2π} e^{−iνΦ} e^{iκ r cos(Φ + φ_k)} dΦ = 2π i^ν e^{iνφ_k} J_ν(κ r)
//! ```
//!
//! Unitary (SU(2), doubled polar angle `θ`): the relative part is
//! `exp(i r k⃗·n̂)` with `k⃗ = (−|K₁₂| cos φ_k, |K₁₂| sin φ_k, κ₁)`, and
//! the projection onto `Y_lm` is `4π i^l j_l(κ r) conj(Y_lm(k̂))`.
//!
//! `κ = ½√((K₁−K₂)² + 2K₁₂²) = √(Tr k² / 2) = |k⃗|` in both classes; the
//! relative energy is `E_rel = κ² = ½ Tr k²`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::liealg::ClassKind;
use crate::numerics::{bessel_j, gauss_legendre, legendre, spherical_bessel_j, spherical_harmonic, LegendreKind};
use crate::{CMat, Error, Result};

/// Plane-wave momentum matrix `K` of a two-particle system.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneWaveParams {
    pub kind: ClassKind,
    pub k1: f64,
    pub k2: f64,
    /// `K₁₂ = (K_R + i K_I)/√2`; `K_I = 0` for the orthogonal class.
    pub k_r: f64,
    pub k_i: f64,
}

impl PlaneWaveParams {
    /// Real symmetric `K = [[K₁, K₁₂/√2], [K₁₂/√2, K₂]]`.
    pub fn orthogonal(k1: f64, k2: f64, k12: f64) -> Self {
        Self { kind: ClassKind::Orthogonal, k1, k2, k_r: k12, k_i: 0.0 }
    }

    /// Hermitian `K` with `K₁₂ = (K_R + i K_I)/√2`.
    pub fn unitary(k1: f64, k2: f64, k_r: f64, k_i: f64) -> Self {
        Self { kind: ClassKind::Unitary, k1, k2, k_r, k_i }
    }

    pub fn matrix(&self) -> CMat {
        let off = Complex64::new(self.k_r, self.k_i) / 2f64.sqrt();
        CMat::from_row_slice(2, 2, &[Complex64::new(self.k1, 0.0), off, off.conj(), Complex64::new(self.k2, 0.0)])
    }

    pub fn trace(&self) -> f64 {
        self.k1 + self.k2
    }

    /// Traceless part `k = K − ½ tr K`.
    pub fn traceless(&self) -> CMat {
        let half = Complex64::new(0.5 * self.trace(), 0.0);
        let mut k = self.matrix();
        k[(0, 0)] -= half;
        k[(1, 1)] -= half;
        k
    }

    /// `κ₁ = (K₁ − K₂)/2`.
    pub fn kappa1(&self) -> f64 {
        0.5 * (self.k1 - self.k2)
    }

    /// `|K₁₂|`.
    pub fn k12_abs(&self) -> f64 {
        (self.k_r.hypot(self.k_i)) / 2f64.sqrt()
    }

    /// `κ = √(κ₁² + |K₁₂|²)`.
    pub fn kappa(&self) -> f64 {
        self.kappa1().hypot(self.k12_abs())
    }

    /// Phase `φ_k`: orthogonal `atan2(K₁₂/√2, κ₁)`, unitary `atan2(K_I, K_R)`.
    pub fn phi_k(&self) -> f64 {
        match self.kind {
            ClassKind::Orthogonal => (self.k_r / 2f64.sqrt()).atan2(self.kappa1()),
            ClassKind::Unitary => self.k_i.atan2(self.k_r),
        }
    }
}

/// Centre-of-mass and relative energies `((trK)²/4, κ²)`, ħ = m = 1.
pub fn energy_split(k: &PlaneWaveParams) -> (f64, f64) {
    let tr = k.trace();
    let kk = k.traceless();
    (0.25 * tr * tr, 0.5 * (&kk * &kk).trace().re)
}

/// Coupling `ν² − ¼` of the orthogonal relative Hamiltonian (units ħ²/m).
pub fn so2_coupling(nu: i64) -> f64 {
    let n = nu as f64;
    n * n - 0.25
}

/// Coupling `l(l+1)` of the unitary relative Hamiltonian (units ħ²/m).
pub fn su2_coupling(l: usize) -> f64 {
    (l * (l + 1)) as f64
}

/// Trapezoid projection of the orthogonal plane wave onto `e^{iνΦ}`.
/// `nu` must be an integer (otherwise boundary terms do not cancel).
pub fn so2_project(k: &PlaneWaveParams, nu: f64, r_grid: &[f64], n_quad: usize) -> Result<Vec<Complex64>> {
    if nu.fract() != 0.0 || !nu.is_finite() {
        return Err(Error::InvalidArgument(format!("so2_project: ν = {nu} must be an integer")));
    }
    if n_quad < 64 {
        return Err(Error::InvalidArgument(format!("so2_project: n_quad = {n_quad} below 64")));
    }
    let kappa = k.kappa();
    let phi_k = k.phi_k();
    let h = 2.0 * PI / n_quad as f64;
    Ok(r_grid
        .iter()
        .map(|&r| {
            let mut s = Complex64::new(0.0, 0.0);
            for q in 0..n_quad {
                let phi = q as f64 * h;
                s += Complex64::from_polar(1.0, -nu * phi + kappa * r * (phi + phi_k).cos());
            }
            s * h
        })
        .collect())
}

/// Closed form `2π i^ν e^{iνφ_k} J_ν(κ r)` of [`so2_project`].
pub fn so2_reference(k: &PlaneWaveParams, nu: i64, r: f64) -> Result<Complex64> {
    let phase = Complex64::from_polar(1.0, nu as f64 * (0.5 * PI + k.phi_k()));
    let j = bessel_j(nu.unsigned_abs() as f64, k.kappa() * r)?;
    let sign = if nu < 0 && nu % 2 != 0 { -1.0 } else { 1.0 };
    Ok(phase * (2.0 * PI * sign * j))
}

/// Product-quadrature projection `∫ conj(Y_lm) ψ_K dΩ` of the unitary
/// relative plane wave: Gauss-Legendre (`n_quad` nodes) in `cos θ` times
/// `2 n_quad` uniform nodes in `φ`.
pub fn su2_project(k: &PlaneWaveParams, l: usize, m: i64, r_grid: &[f64], n_quad: usize) -> Result<Vec<Complex64>> {
    if m.unsigned_abs() as usize > l {
        return Err(Error::InvalidArgument(format!("su2_project: |m| = {} exceeds l = {l}", m.abs())));
    }
    if k.kappa() == 0.0 {
        return Err(Error::InvalidArgument("su2_project: κ = 0 has no direction".into()));
    }
    let rule = gauss_legendre(n_quad)?;
    let n_phi = 2 * n_quad;
    let h = 2.0 * PI / n_phi as f64;
    let (k1, k12, phi_k) = (k.kappa1(), k.k12_abs(), k.phi_k());
    // conj(Y_lm) on the grid does not depend on r
    let mut ybar = Vec::with_capacity(n_quad * n_phi);
    for &x in &rule.nodes {
        let theta = x.acos();
        for q in 0..n_phi {
            ybar.push(spherical_harmonic(l, m, theta, q as f64 * h)?.conj());
        }
    }
    Ok(r_grid
        .iter()
        .map(|&r| {
            let mut s = Complex64::new(0.0, 0.0);
            for (a, (&x, &w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
                let st = (1.0 - x * x).sqrt();
                for q in 0..n_phi {
                    let phi = q as f64 * h;
                    let arg = r * (k1 * x - k12 * st * (phi + phi_k).cos());
                    s += ybar[a * n_phi + q] * Complex64::from_polar(w * h, arg);
                }
            }
            s
        })
        .collect())
}

/// `P_l^m(cos θ_k) j_l(κ r)` with `cos θ_k = κ₁/κ`: the `r`-dependence of
/// [`su2_project`] up to an `r`-independent factor.
pub fn su2_reference(k: &PlaneWaveParams, l: usize, m: i64, r: f64) -> Result<f64> {
    let cos_k = (k.kappa1() / k.kappa()).clamp(-1.0, 1.0);
    let p = legendre(l, m.unsigned_abs() as usize, cos_k, LegendreKind::P)?;
    Ok(p * spherical_bessel_j(l, k.kappa() * r)?)
}

/// One CSV row of an N = 2 projection.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionRow {
    pub r: f64,
    pub re_psi: f64,
    pub im_psi: f64,
    pub reference: f64,
}
