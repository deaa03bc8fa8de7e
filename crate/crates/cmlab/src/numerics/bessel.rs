use std::f64::consts::PI;

use super::gamma::ln_gamma;
use crate::{Error, Result};

/// Largest supported order of [`bessel_j`].
pub const BESSEL_MAX_ORDER: f64 = 50.0;
/// Largest supported argument of [`bessel_j`].
pub const BESSEL_MAX_X: f64 = 1e4;

// Below this argument the ascending series loses at most ~3 digits to
// cancellation (the largest term is bounded by I_0(8) ≈ 427).
const SERIES_MAX_X: f64 = 8.0;

/// Bessel function of the first kind `J_ν(x)` for real `0 ≤ ν ≤ 50`,
/// `0 ≤ x ≤ 1e4`.
///
/// Small arguments use the ascending series. Larger arguments use Miller's
/// downward recurrence from far above `max(ν, x)`, normalized with the
/// Neumann sum `(x/2)^ν₀ = Σ_k (ν₀+2k) Γ(ν₀+k)/k! · J_{ν₀+2k}(x)` where
/// `ν₀ = ν − ⌊ν⌋`.
pub fn bessel_j(order: f64, x: f64) -> Result<f64> {
    if !(0.0..=BESSEL_MAX_ORDER).contains(&order) || !(0.0..=BESSEL_MAX_X).contains(&x) {
        return Err(Error::Envelope(format!(
            "bessel_j: (order, x) = ({order}, {x}) outside [0, {BESSEL_MAX_ORDER}] x [0, {BESSEL_MAX_X}]"
        )));
    }
    if x == 0.0 {
        return Ok(if order == 0.0 { 1.0 } else { 0.0 });
    }
    if x <= SERIES_MAX_X {
        Ok(series(order, x))
    } else {
        Ok(miller(order, x))
    }
}

fn series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let log_t0 = nu * half.ln() - ln_gamma(nu + 1.0);
    if log_t0 < -745.0 {
        return 0.0;
    }
    let mut term = log_t0.exp();
    let mut sum = term;
    let q = -half * half;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * (kf + nu));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn miller(nu: f64, x: f64) -> f64 {
    let n = nu.floor() as usize;
    let nu0 = nu - n as f64;
    let top = (n as f64).max(x.ceil());
    let mut m = (top + 20.0 + (160.0 * top).sqrt()) as usize;
    m += m % 2;

    // weights w_j of the Neumann normalization, j = k/2
    let mut w = Vec::with_capacity(m / 2 + 1);
    w.push(ln_gamma(nu0 + 1.0).exp());
    let mut g = w[0]; // Γ(ν₀ + j) / j! at j = 1
    for j in 1..=m / 2 {
        if j > 1 {
            g *= (nu0 + (j - 1) as f64) / j as f64;
        }
        w.push((nu0 + 2.0 * j as f64) * g);
    }

    let mut above = 0.0;
    let mut cur = 1e-300;
    let mut sum = 0.0;
    let mut target = 0.0;
    let mut k = m;
    loop {
        if k % 2 == 0 {
            sum += w[k / 2] * cur;
        }
        if k == n {
            target = cur;
        }
        if k == 0 {
            break;
        }
        let below = 2.0 * (nu0 + k as f64) / x * cur - above;
        above = cur;
        cur = below;
        k -= 1;
        if cur.abs() > 1e250 {
            above *= 1e-250;
            cur *= 1e-250;
            sum *= 1e-250;
            target *= 1e-250;
        }
    }
    target * (0.5 * x).powf(nu0) / sum
}

/// Spherical Bessel function `j_l(x) = √(π/2x) J_{l+½}(x)`, with
/// `j_l(0) = δ_{l0}`.
pub fn spherical_bessel_j(l: usize, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(if l == 0 { 1.0 } else { 0.0 });
    }
    Ok((PI / (2.0 * x)).sqrt() * bessel_j(l as f64 + 0.5, x)?)
}
