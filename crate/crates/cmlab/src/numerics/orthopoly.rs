use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

/// Largest degree accepted by [`hermite`] and [`laguerre`].
pub const POLY_MAX_DEGREE: usize = 200;

/// First (`P`) or second (`Q`) kind Legendre function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegendreKind {
    P,
    Q,
}

/// Associated Legendre function of the first or second kind on the cut,
/// `P_l^m(x)` or `Q_l^m(x)` for `|x| ≤ 1` (`|x| < 1` for `Q`), with the
/// Condon-Shortley phase, so `P_1^1(x) = −√(1−x²)`.
///
/// `P` is built by raising `P_m^m` and recurring upward in `l`. `Q` starts
/// from `Q_0 = atanh x`, recurs upward in `l`, and raises the order with
/// `Q_l^{m+1} = −2mx/√(1−x²) Q_l^m − (l+m)(l−m+1) Q_l^{m−1}`.
pub fn legendre(l: usize, m: usize, x: f64, kind: LegendreKind) -> Result<f64> {
    if m > l {
        return Err(Error::InvalidArgument(format!("legendre: m = {m} exceeds l = {l}")));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Envelope(format!("legendre: x = {x} outside [-1, 1]")));
    }
    match kind {
        LegendreKind::P => Ok(assoc_p(l, m, x)),
        LegendreKind::Q => {
            if x.abs() >= 1.0 {
                return Err(Error::Envelope(format!("legendre Q: |x| = {} must be < 1", x.abs())));
            }
            Ok(assoc_q(l, m, x))
        }
    }
}

fn assoc_p(l: usize, m: usize, x: f64) -> f64 {
    let mut pmm = 1.0;
    if m > 0 {
        let s = ((1.0 - x) * (1.0 + x)).sqrt();
        let mut odd = 1.0;
        for _ in 0..m {
            pmm *= -odd * s;
            odd += 2.0;
        }
    }
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = x * (2 * m + 1) as f64 * pmm;
    for ll in (m + 2)..=l {
        let next = (x * (2 * ll - 1) as f64 * cur - (ll + m - 1) as f64 * prev) / (ll - m) as f64;
        prev = cur;
        cur = next;
    }
    cur
}

fn q_table(l: usize, x: f64) -> Vec<f64> {
    let mut q = Vec::with_capacity(l + 1);
    q.push(x.atanh());
    if l >= 1 {
        q.push(x * q[0] - 1.0);
    }
    for k in 1..l {
        let next = ((2 * k + 1) as f64 * x * q[k] - k as f64 * q[k - 1]) / (k + 1) as f64;
        q.push(next);
    }
    q
}

fn assoc_q(l: usize, m: usize, x: f64) -> f64 {
    let q = q_table(l, x);
    if m == 0 {
        return q[l];
    }
    let one_minus = (1.0 - x) * (1.0 + x);
    let s = one_minus.sqrt();
    // dQ_l/dx
    let dq = if l == 0 { 1.0 / one_minus } else { l as f64 * (x * q[l] - q[l - 1]) / (x * x - 1.0) };
    let mut prev = q[l];
    let mut cur = -s * dq;
    for mm in 1..m {
        let next = -2.0 * mm as f64 * x / s * cur - ((l + mm) as f64) * ((l as f64) - mm as f64 + 1.0) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite polynomial `H_n(x)`.
pub fn hermite(n: usize, x: f64) -> Result<f64> {
    if n > POLY_MAX_DEGREE {
        return Err(Error::Envelope(format!("hermite: n = {n} exceeds {POLY_MAX_DEGREE}")));
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Associated Laguerre polynomial `L_n^a(x)` for `a > −1`, `x ≥ 0`.
pub fn laguerre(n: usize, a: f64, x: f64) -> Result<f64> {
    if n > POLY_MAX_DEGREE || !(a > -1.0) || !(x >= 0.0) {
        return Err(Error::Envelope(format!("laguerre: (n, a, x) = ({n}, {a}, {x}) outside envelope")));
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 1.0 + a - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Orthonormal spherical harmonic `Y_l^m(θ, φ)` with the Condon-Shortley
/// phase and `Y_l^{−m} = (−1)^m conj(Y_l^m)`.
pub fn spherical_harmonic(l: usize, m: i64, theta: f64, phi: f64) -> Result<Complex64> {
    let am = m.unsigned_abs() as usize;
    if am > l {
        return Err(Error::InvalidArgument(format!("spherical_harmonic: |m| = {am} exceeds l = {l}")));
    }
    if !theta.is_finite() || !phi.is_finite() {
        return Err(Error::InvalidArgument("spherical_harmonic: non-finite angle".into()));
    }
    // (l−m)!/(l+m)! as a product to avoid overflow
    let mut ratio = 1.0;
    for k in (l - am + 1)..=(l + am) {
        ratio /= k as f64;
    }
    let norm = ((2 * l + 1) as f64 / (4.0 * PI) * ratio).sqrt();
    let p = assoc_p(l, am, theta.cos().clamp(-1.0, 1.0));
    let y = Complex64::from_polar(norm * p, am as f64 * phi);
    if m < 0 {
        let sign = if am % 2 == 0 { 1.0 } else { -1.0 };
        Ok(sign * y.conj())
    } else {
        Ok(y)
    }
}
