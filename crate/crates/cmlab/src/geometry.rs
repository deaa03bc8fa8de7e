//! Geometry of the reduction `X = U(a)† D U(a)`.
//!
//! With `(∂_{a_l} U) U† = Σ_m u_lm τ_m` and `Ω_l = [D, (∂_{a_l} U) U†]`:
//!
//! * `Tr dX² = Σ dD_i² + g_lk da_l da_k`, `g_lk = Tr(Ω_l Ω_k) = ½ (u 𝐃² uᵀ)_lk`
//! * `det g = 2^{−d} 𝒟² (det u)²`, `𝒟 = Π_{i<j} |D_i − D_j|^α`
//! * `F_(ij) = (det u)⁻¹ Σ_(pq) ∂_(pq)(det u · u⁻¹_(ij)(pq)) = 0`
//! * `ν = −f` for the commutator coefficients of the `λ` operators.
//!
//! Chart points of the unitary class carry the `N² − N` off-diagonal
//! coordinates. The `u` matrix is always computed on the closed `u(N)`
//! algebra and the metric uses its chart block. The divergence and
//! commutator identities are evaluated on the full `u(N)` chart (Cartan
//! coordinates zero at the point, differentiated like the others): on the
//! gauge-fixed chart alone they do not hold, which
//! [`gauge_fixed_lie_checks`] reports.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::liealg::{
    adjoint_matrix, build_generator_basis, diag_commutator, group_element, structure_constants, u_of_a,
    GeneratorBasis, StructureConstants, SymmetryClass,
};
use crate::{CMat, Error, Mat, Result};

/// Default finite-difference step for derivatives of `u`.
pub const DEFAULT_FD_STEP: f64 = 1e-4;
/// Radius of the ball in which random chart coordinates are drawn.
pub const CHART_RADIUS: f64 = 0.5;
/// Minimum eigenvalue gap of a chart point.
pub const DEFAULT_D_GAP: f64 = 1e-8;
const SERIES_TOL: f64 = 1e-16;

/// A point `(D, a)` of the reduced chart.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartPoint {
    pub class: SymmetryClass,
    pub d: Vec<f64>,
    pub a: Vec<f64>,
}

impl ChartPoint {
    /// Requires strictly increasing `d` (gap above [`DEFAULT_D_GAP`]) and
    /// `a` of chart length.
    pub fn new(class: SymmetryClass, d: Vec<f64>, a: Vec<f64>) -> Result<Self> {
        if d.windows(2).any(|w| w[1] - w[0] <= DEFAULT_D_GAP) {
            return Err(Error::InvalidArgument("chart point: D must be strictly increasing".into()));
        }
        Self::with_distinct(class, d, a)
    }

    /// Like [`ChartPoint::new`] but only requires the `D_i` to be distinct.
    pub fn with_distinct(class: SymmetryClass, d: Vec<f64>, a: Vec<f64>) -> Result<Self> {
        if d.len() != class.n() {
            return Err(Error::DimensionMismatch { expected: class.n(), got: d.len() });
        }
        if a.len() != class.dim() {
            return Err(Error::DimensionMismatch { expected: class.dim(), got: a.len() });
        }
        for i in 0..d.len() {
            for j in (i + 1)..d.len() {
                if (d[i] - d[j]).abs() <= DEFAULT_D_GAP {
                    return Err(Error::CollisionMargin(format!("D_{} = D_{}", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { class, d, a })
    }

    /// Random point: sorted Gaussian `D` with gaps above `0.1`, `a` uniform
    /// in the ball of radius [`CHART_RADIUS`].
    pub fn random(class: SymmetryClass, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = class.n();
        let d = loop {
            let mut d: Vec<f64> = (0..n).map(|_| 1.5 * Distribution::<f64>::sample(&StandardNormal, &mut rng)).collect();
            d.sort_by(f64::total_cmp);
            if d.windows(2).all(|w| w[1] - w[0] > 0.1) {
                break d;
            }
        };
        let dim = class.dim();
        let mut a: Vec<f64> = (0..dim).map(|_| Distribution::<f64>::sample(&StandardNormal, &mut rng)).collect();
        let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        let radius = CHART_RADIUS * rng.random::<f64>().powf(1.0 / dim as f64);
        for x in a.iter_mut() {
            *x *= radius / norm;
        }
        Self::new(class, d, a)
    }
}

/// Generator basis and structure constants of one class, shared by all
/// geometry evaluations.
#[derive(Clone, Debug)]
pub struct Chart {
    class: SymmetryClass,
    basis: GeneratorBasis,
    f: StructureConstants,
}

/// Metric data at a chart point.
#[derive(Clone, Debug)]
pub struct MetricEvaluation {
    pub g_aa: Mat,
    pub det_g: f64,
    pub g_inv: Mat,
    /// `𝒟 = Π_{i<j} |D_i − D_j|^α`.
    pub script_d: f64,
    /// Chart block of `u(A)`.
    pub u: Mat,
}

/// Per-point residuals reported by the metric audit.
#[derive(Clone, Debug, Serialize)]
pub struct AuditRow {
    pub class: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub seed: u64,
    pub residual_det: f64,
    pub residual_factorization: f64,
    #[serde(rename = "max_F")]
    pub max_f: f64,
    pub max_nu_plus_f: f64,
    pub u_condition: f64,
}

impl Chart {
    pub fn new(class: SymmetryClass) -> Self {
        let basis = build_generator_basis(class);
        let f = structure_constants(&basis);
        Self { class, basis, f }
    }

    pub fn class(&self) -> SymmetryClass {
        self.class
    }

    pub fn basis(&self) -> &GeneratorBasis {
        &self.basis
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.f
    }

    fn check(&self, pt: &ChartPoint) -> Result<()> {
        if pt.class != self.class {
            return Err(Error::InvalidArgument(format!("chart is {} but point is {}", self.class, pt.class)));
        }
        Ok(())
    }

    /// `u(A(a))` over the closed algebra; `a` of chart or algebra length.
    pub fn u_full(&self, a: &[f64]) -> Result<Mat> {
        u_of_a(&adjoint_matrix(&self.f, a)?, SERIES_TOL)
    }

    /// Chart block (`d × d`) of [`Chart::u_full`].
    pub fn u_chart(&self, a: &[f64]) -> Result<Mat> {
        let d = self.class.dim();
        Ok(self.u_full(a)?.view((0, 0), (d, d)).into_owned())
    }

    /// `X(D, a) = U† D U`.
    pub fn x_matrix(&self, d: &[f64], a: &[f64]) -> Result<CMat> {
        let u = group_element(&self.basis, a)?;
        let dm = CMat::from_diagonal(&nalgebra::DVector::from_iterator(d.len(), d.iter().map(|&x| Complex64::new(x, 0.0))));
        Ok(u.adjoint() * dm * u)
    }

    /// `Ω_l = Σ_m u_lm [D, τ_m]` for the chart coordinates `l`.
    pub fn omega_matrices(&self, pt: &ChartPoint) -> Result<Vec<CMat>> {
        self.check(pt)?;
        let u = self.u_chart(&pt.a)?;
        let comms: Vec<CMat> = self.basis.chart_matrices().iter().map(|t| diag_commutator(&pt.d, t)).collect();
        let dim = self.class.dim();
        let n = self.class.n();
        Ok((0..dim)
            .map(|l| {
                let mut om = CMat::zeros(n, n);
                for (m, c) in comms.iter().enumerate() {
                    let w = u[(l, m)];
                    if w != 0.0 {
                        om += c * Complex64::new(w, 0.0);
                    }
                }
                om
            })
            .collect())
    }

    /// Real coordinates of a Hermitian matrix: `x_ii`, then for `i < j`
    /// `√2 Re X_ij` (and `√2 Im X_ij` for the unitary class).
    pub fn real_coordinates(&self, x: &CMat) -> Vec<f64> {
        let n = self.class.n();
        let s = std::f64::consts::SQRT_2;
        let mut v: Vec<f64> = (0..n).map(|i| x[(i, i)].re).collect();
        for i in 0..n {
            for j in (i + 1)..n {
                v.push(s * x[(i, j)].re);
                if self.class.is_unitary() {
                    v.push(s * x[(i, j)].im);
                }
            }
        }
        v
    }

    /// Jacobian `∂(real coordinates of X)/∂(D, a)`, square of size `N + d`.
    pub fn jacobian(&self, pt: &ChartPoint) -> Result<Mat> {
        self.check(pt)?;
        let n = self.class.n();
        let dim = self.class.dim();
        let u = group_element(&self.basis, &pt.a)?;
        let ud = u.adjoint();
        let mut jac = Mat::zeros(n + dim, n + dim);
        for k in 0..n {
            let mut e = CMat::zeros(n, n);
            e[(k, k)] = Complex64::new(1.0, 0.0);
            let col = self.real_coordinates(&(&ud * e * &u));
            jac.column_mut(k).copy_from_slice(&col);
        }
        for (l, om) in self.omega_matrices(pt)?.iter().enumerate() {
            let col = self.real_coordinates(&(&ud * om * &u));
            jac.column_mut(n + l).copy_from_slice(&col);
        }
        Ok(jac)
    }

    /// Central finite-difference Jacobian of `X(D, a)`.
    pub fn jacobian_fd(&self, pt: &ChartPoint, h: f64) -> Result<Mat> {
        self.check(pt)?;
        let n = self.class.n();
        let dim = self.class.dim();
        let mut jac = Mat::zeros(n + dim, n + dim);
        for c in 0..n + dim {
            let (mut dp, mut dm) = (pt.d.clone(), pt.d.clone());
            let (mut ap, mut am) = (pt.a.clone(), pt.a.clone());
            if c < n {
                dp[c] += h;
                dm[c] -= h;
            } else {
                ap[c - n] += h;
                am[c - n] -= h;
            }
            let xp = self.real_coordinates(&self.x_matrix(&dp, &ap)?);
            let xm = self.real_coordinates(&self.x_matrix(&dm, &am)?);
            for r in 0..n + dim {
                jac[(r, c)] = (xp[r] - xm[r]) / (2.0 * h);
            }
        }
        Ok(jac)
    }

    /// Metric block `g_aa(l, k) = Tr(Ω_l Ω_k)` with its determinant and inverse.
    pub fn metric(&self, pt: &ChartPoint) -> Result<MetricEvaluation> {
        let om = self.omega_matrices(pt)?;
        let g_aa = gram(&om);
        let det_g = g_aa.clone().lu().determinant();
        let g_inv = g_aa.clone().try_inverse().ok_or(Error::Singular)?;
        let u = self.u_chart(&pt.a)?;
        Ok(MetricEvaluation { g_aa, det_g, g_inv, script_d: script_d(&pt.d, self.class.alpha()), u })
    }

    /// `‖g_aa − ½ u 𝐃² uᵀ‖ / ‖g_aa‖` with `𝐃 = diag(D_p − D_q)` over `I`.
    pub fn metric_factorization_residual(&self, pt: &ChartPoint) -> Result<f64> {
        let m = self.metric(pt)?;
        let dd = Mat::from_diagonal(&nalgebra::DVector::from_iterator(
            self.class.dim(),
            self.class.pairs().into_iter().map(|(p, q)| {
                let x = pt.d[p] - pt.d[q];
                x * x
            }),
        ));
        let rhs = &m.u * dd * m.u.transpose() * 0.5;
        Ok((&m.g_aa - rhs).norm() / m.g_aa.norm())
    }

    /// `|det g − 2^{−d} 𝒟² (det u)²| / det g`, determinants by LU.
    pub fn det_identity_check(&self, pt: &ChartPoint) -> Result<f64> {
        let m = self.metric(pt)?;
        let det_u = m.u.clone().lu().determinant();
        let d = self.class.dim() as i32;
        let rhs = 2f64.powi(-d) * m.script_d * m.script_d * det_u * det_u;
        Ok((m.det_g - rhs).abs() / m.det_g.abs())
    }

    /// Jacobian pullback check: `max |JᵀJ − (1_N ⊕ g_aa)|`.
    pub fn pullback_residual(&self, pt: &ChartPoint) -> Result<f64> {
        let j = self.jacobian(pt)?;
        let jtj = j.transpose() * &j;
        let n = self.class.n();
        let m = self.metric(pt)?;
        let mut full = Mat::zeros(jtj.nrows(), jtj.ncols());
        for i in 0..n {
            full[(i, i)] = 1.0;
        }
        full.view_mut((n, n), (self.class.dim(), self.class.dim())).copy_from(&m.g_aa);
        Ok((jtj - full).amax())
    }

    /// Condition number `‖u‖₂ ‖u⁻¹‖₂` of the chart block of `u`.
    pub fn u_condition(&self, pt: &ChartPoint) -> Result<f64> {
        let sv = self.u_chart(&pt.a)?.singular_values();
        let max = sv.max();
        let min = sv.min();
        if min == 0.0 {
            return Err(Error::Singular);
        }
        Ok(max / min)
    }

    /// `F` over the algebra indices, by central differences of step `h`.
    pub fn f_divergence(&self, pt: &ChartPoint, h: f64) -> Result<Vec<f64>> {
        self.check(pt)?;
        Ok(self.lie_data(&self.basis.pad(&pt.a)?, h, false)?.0)
    }

    /// `max |ν + f|` over the algebra indices.
    pub fn lambda_commutator_check(&self, pt: &ChartPoint, h: f64) -> Result<f64> {
        self.check(pt)?;
        Ok(self.lie_data(&self.basis.pad(&pt.a)?, h, true)?.1)
    }

    /// Both identities restricted to the gauge-fixed chart (the `d` pair
    /// coordinates and the chart block of `u`). For the orthogonal class
    /// this coincides with the full evaluation; for the unitary class the
    /// off-diagonal generators do not close and the identities fail.
    pub fn gauge_fixed_lie_checks(&self, pt: &ChartPoint, h: f64) -> Result<(f64, f64)> {
        self.check(pt)?;
        let (f, nu) = self.lie_data_on(&pt.a, self.class.dim(), h, true)?;
        Ok((f.iter().fold(0.0, |m, x| m.max(x.abs())), nu))
    }

    fn lie_data(&self, a_full: &[f64], h: f64, want_nu: bool) -> Result<(Vec<f64>, f64)> {
        self.lie_data_on(a_full, self.basis.algebra_dim(), h, want_nu)
    }

    // F and max|ν + f| with coordinates and u restricted to the first `dim`
    // algebra directions.
    fn lie_data_on(&self, a: &[f64], dim: usize, h: f64, want_nu: bool) -> Result<(Vec<f64>, f64)> {
        if !(h > 0.0) {
            return Err(Error::InvalidArgument(format!("finite-difference step h = {h} must be positive")));
        }
        let alg = self.basis.algebra_dim();
        let block = |x: &[f64]| -> Result<Mat> {
            let mut full = x.to_vec();
            full.resize(alg, 0.0);
            Ok(self.u_full(&full)?.view((0, 0), (dim, dim)).into_owned())
        };
        let a = &a[..dim];
        let u = block(a)?;
        let det_u = u.clone().lu().determinant();
        let ui = u.clone().try_inverse().ok_or(Error::Singular)?;
        if det_u == 0.0 {
            return Err(Error::Singular);
        }
        let mut d_g: Vec<Mat> = Vec::with_capacity(dim); // ∂_p (det u · u⁻¹)
        let mut d_ui: Vec<Mat> = Vec::with_capacity(dim); // ∂_p u⁻¹
        for p in 0..dim {
            let (mut ap, mut am) = (a.to_vec(), a.to_vec());
            ap[p] += h;
            am[p] -= h;
            let (up, um) = (block(&ap)?, block(&am)?);
            let (uip, uim) = (
                up.clone().try_inverse().ok_or(Error::Singular)?,
                um.clone().try_inverse().ok_or(Error::Singular)?,
            );
            let (dp, dm) = (up.lu().determinant(), um.lu().determinant());
            d_g.push((&uip * dp - &uim * dm) / (2.0 * h));
            d_ui.push((uip - uim) / (2.0 * h));
        }
        let f_vec: Vec<f64> = (0..dim).map(|i| (0..dim).map(|p| d_g[p][(i, p)]).sum::<f64>() / det_u).collect();
        if !want_nu {
            return Ok((f_vec, 0.0));
        }
        // μ_iks = Σ_p ui_ip ∂_p ui_ks − (i ↔ k);  ν_ikm = Σ_s μ_iks u_sm
        let mut worst = 0.0_f64;
        for i in 0..dim {
            for k in 0..dim {
                let mut mu = vec![0.0; dim];
                for (s, m) in mu.iter_mut().enumerate() {
                    let mut acc = 0.0;
                    for p in 0..dim {
                        acc += ui[(i, p)] * d_ui[p][(k, s)] - ui[(k, p)] * d_ui[p][(i, s)];
                    }
                    *m = acc;
                }
                for m in 0..dim {
                    let nu: f64 = (0..dim).map(|s| mu[s] * u[(s, m)]).sum();
                    worst = worst.max((nu + self.f.get(i, k, m)).abs());
                }
            }
        }
        Ok((f_vec, worst))
    }

    /// One metric-audit row: determinant identity, factorization, `F` and
    /// `ν + f` at a random point drawn from `seed`.
    pub fn audit(&self, seed: u64, h: f64) -> Result<AuditRow> {
        let pt = ChartPoint::random(self.class, seed)?;
        let f = self.f_divergence(&pt, h)?;
        Ok(AuditRow {
            class: self.class.kind().to_string(),
            n: self.class.n(),
            seed,
            residual_det: self.det_identity_check(&pt)?,
            residual_factorization: self.metric_factorization_residual(&pt)?,
            max_f: f.iter().fold(0.0, |m, x| m.max(x.abs())),
            max_nu_plus_f: self.lambda_commutator_check(&pt, h)?,
            u_condition: self.u_condition(&pt)?,
        })
    }
}

fn gram(om: &[CMat]) -> Mat {
    let d = om.len();
    let mut g = Mat::zeros(d, d);
    for l in 0..d {
        for k in l..d {
            let v = (&om[l] * &om[k]).trace().re;
            g[(l, k)] = v;
            g[(k, l)] = v;
        }
    }
    g
}

/// `𝒟 = Π_{i<j} |D_i − D_j|^α`.
pub fn script_d(d: &[f64], alpha: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            p *= (d[i] - d[j]).abs().powi(alpha as i32);
        }
    }
    p
}

/// Gram metric of an arbitrary parametrization `q ↦ U(q)` at `D`, from
/// central differences of `U`: `Ω_q = [D, (∂_q U) U†]`, `g = Tr(Ω_q Ω_k)`.
/// Returns `(Ω, g)`.
pub fn metric_for_parametrization<F>(d: &[f64], u_of_q: F, q: &[f64], h: f64) -> (Vec<CMat>, Mat)
where
    F: Fn(&[f64]) -> CMat,
{
    let u = u_of_q(q);
    let ud = u.adjoint();
    let om: Vec<CMat> = (0..q.len())
        .map(|c| {
            let (mut qp, mut qm) = (q.to_vec(), q.to_vec());
            qp[c] += h;
            qm[c] -= h;
            let du = (u_of_q(&qp) - u_of_q(&qm)) * Complex64::new(1.0 / (2.0 * h), 0.0);
            diag_commutator(d, &(du * &ud))
        })
        .collect();
    let g = gram(&om);
    (om, g)
}

/// `b(D) = α(2−α)/2 · Σ_{i<j} (D_i − D_j)⁻²`.
pub fn similarity_scalar(d: &[f64], alpha: u32) -> Result<f64> {
    let a = f64::from(alpha);
    let mut s = 0.0;
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            let x = d[i] - d[j];
            if x == 0.0 {
                return Err(Error::CollisionMargin(format!("D_{} = D_{}", i + 1, j + 1)));
            }
            s += 1.0 / (x * x);
        }
    }
    Ok(a * (2.0 - a) / 2.0 * s)
}

/// Finite-difference check of `𝒟^{½} Δ_D 𝒟^{−½} f = Σ ∂²f + b(D) f` with
/// `Δ_D = 𝒟⁻¹ Σ_i ∂_i 𝒟 ∂_i`, at `d` with step `h`. Returns the absolute
/// residual.
pub fn similarity_residual<F>(d: &[f64], alpha: u32, f: F, h: f64) -> Result<f64>
where
    F: Fn(&[f64]) -> f64,
{
    let b = similarity_scalar(d, alpha)?;
    let sd = |x: &[f64]| script_d(x, alpha);
    let g = |x: &[f64]| f(x) / sd(x).sqrt();
    let shifted = |i: usize, s: f64| {
        let mut x = d.to_vec();
        x[i] += s;
        x
    };
    let mut lap_d = 0.0;
    let mut lap_f = 0.0;
    for i in 0..d.len() {
        let (xp, xm) = (shifted(i, h), shifted(i, -h));
        let (hp, hm) = (shifted(i, 0.5 * h), shifted(i, -0.5 * h));
        let flux_p = sd(&hp) * (g(&xp) - g(d)) / h;
        let flux_m = sd(&hm) * (g(d) - g(&xm)) / h;
        lap_d += (flux_p - flux_m) / h;
        lap_f += (f(&xp) - 2.0 * f(d) + f(&xm)) / (h * h);
    }
    let lhs = sd(d).sqrt() * lap_d / sd(d);
    Ok((lhs - (lap_f + b * f(d))).abs())
}

/// Draw `count` seeds deterministically from a base seed.
pub fn seed_stream(base: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    (0..count).map(|_| rng.random()).collect()
}

/// Hermiticity residual `max ‖Ω − Ω†‖` at a point.
pub fn hermiticity_residual(om: &[CMat]) -> f64 {
    om.iter().map(|o| (o - o.adjoint()).norm()).fold(0.0, f64::max)
}
