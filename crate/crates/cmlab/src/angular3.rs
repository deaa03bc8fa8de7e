//! Three-particle angular eigenproblems in truncated sine bases.
//!
//! Orthogonal: `−Φ'' − Φ/(4 sin²φ) = b²Φ` on `[0, π]`, basis `sin(nφ)`,
//! split into odd and even `n`.
//!
//! Unitary: `−Φ'' + c/sin²φ Φ + c/sin²(φ − 2π/3) Φ = b²Φ` split into a low
//! segment `[0, 2π/3]` (basis `sin(3nφ/2)`) and a high segment `[2π/3, π]`
//! (basis `sin(3nφ)`). The printed tables use `c = ¼`.
//!
//! Every block is a single parity. `dim` counts the modes of one block, so
//! the odd block holds `n = 1, 3, …, 2 dim − 1` and the even one
//! `n = 2, 4, …, 2 dim`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::liealg::ClassKind;
use crate::numerics::{digamma, gauss_legendre, legendre, sym_eig, LegendreKind, DEFAULT_EIG_TOL};
use crate::{Error, Mat, Result};

/// Coupling of the printed unitary equations.
pub const TABLE_COUPLING: f64 = 0.25;
/// Gauss-Legendre nodes for the `I`-integrals.
pub const IL_QUADRATURE_NODES: usize = 256;
/// Orthogonal eigenvalues below `−NEGATIVE_TOL` are rejected.
pub const NEGATIVE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    /// The `k`-th (0-based) Fourier index of this parity.
    pub fn index(self, k: usize) -> usize {
        match self {
            Parity::Odd => 2 * k + 1,
            Parity::Even => 2 * k + 2,
        }
    }

    pub fn of(n: usize) -> Self {
        if n % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Unitary segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Segment {
    Low,
    High,
}

impl Segment {
    /// Basis frequency: `sin(freq · n · φ)`.
    pub fn frequency(self) -> f64 {
        match self {
            Segment::Low => 1.5,
            Segment::High => 3.0,
        }
    }

    /// Integration range `[0, upper]` of the `I`-integrals.
    pub fn upper(self) -> f64 {
        match self {
            Segment::Low => 2.0 * PI / 3.0,
            Segment::High => PI / 3.0,
        }
    }

    /// Where the segment sits on the circle.
    pub fn range(self) -> (f64, f64) {
        match self {
            Segment::Low => (0.0, 2.0 * PI / 3.0),
            Segment::High => (2.0 * PI / 3.0, PI),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Orthogonal(Parity),
    Unitary(Segment, Parity),
}

impl Sector {
    pub fn parity(self) -> Parity {
        match self {
            Sector::Orthogonal(p) | Sector::Unitary(_, p) => p,
        }
    }

    pub fn class(self) -> ClassKind {
        match self {
            Sector::Orthogonal(_) => ClassKind::Orthogonal,
            Sector::Unitary(..) => ClassKind::Unitary,
        }
    }

    /// Basis frequency scale: `1` (orthogonal), `3/2` (low), `3` (high).
    pub fn frequency(self) -> f64 {
        match self {
            Sector::Orthogonal(_) => 1.0,
            Sector::Unitary(s, _) => s.frequency(),
        }
    }

    /// `δb` baseline `freq · l`.
    pub fn baseline(self, l: usize) -> f64 {
        self.frequency() * l as f64
    }
}

/// How the unitary `I`-integrals enter the matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IntegralMode {
    Quadrature,
    Digamma,
}

/// One truncated block of an angular eigenproblem, `M a = b² a`.
#[derive(Clone, Debug)]
pub struct SectorProblem {
    pub sector: Sector,
    pub dim: usize,
    /// Fourier index `n` of each row.
    pub indices: Vec<usize>,
    pub matrix: Mat,
    pub exact_integrals: bool,
    pub coupling: f64,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim < 4 {
        return Err(Error::InvalidArgument(format!("truncation dim = {dim} below 4")));
    }
    Ok(())
}

/// Orthogonal odd/even block of size `dim`.
pub fn orthogonal_sector_matrix(parity: Parity, dim: usize) -> Result<SectorProblem> {
    check_dim(dim)?;
    let mut m = Mat::zeros(dim, dim);
    for p in 1..=dim {
        for q in 1..=dim {
            let (pf, mn) = (p as f64, p.min(q) as f64);
            m[(p - 1, q - 1)] = match (parity, p == q) {
                (Parity::Odd, true) => (2.0 * pf - 1.0).powi(2) - pf + 0.5,
                (Parity::Odd, false) => -(mn - 0.5),
                (Parity::Even, true) => (2.0 * pf).powi(2) - pf,
                (Parity::Even, false) => -mn,
            };
        }
    }
    Ok(SectorProblem {
        sector: Sector::Orthogonal(parity),
        dim,
        indices: (0..dim).map(|k| parity.index(k)).collect(),
        matrix: m,
        exact_integrals: true,
        coupling: TABLE_COUPLING,
    })
}

/// `δ_n = 3πn/2 + √3/3 − I^L_n` (closed form).
pub fn delta_n(n: usize) -> Result<f64> {
    Ok(1.5 * PI * n as f64 + 3f64.sqrt() / 3.0 - il_diagonal_digamma(n)?)
}

fn il_diagonal_digamma(n: usize) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    let nf = n as f64;
    Ok(1.5 * PI * nf + 0.5 * 3f64.sqrt() * nf * (digamma(0.5 * nf + 2.0 / 3.0)? - digamma(0.5 * nf + 1.0 / 3.0)?))
}

fn ih_diagonal_digamma(n: usize) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    Ok(6.0 * PI * n as f64 - il_diagonal_digamma(2 * n)?)
}

/// `I_{n,m} = (1 + (−1)^{n+m}) ∫₀^U sin(c n φ) sin(c m φ) / sin²φ dφ`,
/// `(c, U) = (3/2, 2π/3)` (low) or `(3, π/3)` (high).
pub fn il_integral(n: usize, m: usize, mode: IntegralMode, segment: Segment) -> Result<f64> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!("il_integral: indices ({n}, {m}) must be ≥ 1")));
    }
    if (n + m) % 2 == 1 {
        return Ok(0.0);
    }
    match mode {
        IntegralMode::Digamma => {
            let diag = match segment {
                Segment::Low => il_diagonal_digamma,
                Segment::High => ih_diagonal_digamma,
            };
            Ok(diag((n + m) / 2)? - diag(n.abs_diff(m) / 2)?)
        }
        IntegralMode::Quadrature => {
            let rule = gauss_legendre(IL_QUADRATURE_NODES)?;
            let c = segment.frequency();
            let (nf, mf) = (n as f64, m as f64);
            Ok(2.0 * rule.integrate(0.0, segment.upper(), |x| {
                let s = x.sin();
                (c * nf * x).sin() * (c * mf * x).sin() / (s * s)
            }))
        }
    }
}

/// Unitary block. `exact = false` gives the printed approximate matrices,
/// `exact = true` the full `I`-integrals (digamma form). Coupling `¼`.
pub fn unitary_sector_matrix(segment: Segment, parity: Parity, dim: usize, exact: bool) -> Result<SectorProblem> {
    unitary_sector_matrix_with_coupling(segment, parity, dim, exact, TABLE_COUPLING)
}

/// [`unitary_sector_matrix`] for potential `c/sin²φ + c/sin²(φ − 2π/3)`.
/// The approximate form scales the `¼` display linearly in `c`.
pub fn unitary_sector_matrix_with_coupling(
    segment: Segment,
    parity: Parity,
    dim: usize,
    exact: bool,
    coupling: f64,
) -> Result<SectorProblem> {
    check_dim(dim)?;
    let indices: Vec<usize> = (0..dim).map(|k| parity.index(k)).collect();
    let full = unitary_full_matrix(segment, 2 * dim, exact, coupling)?;
    let m = Mat::from_fn(dim, dim, |a, b| full[(indices[a] - 1, indices[b] - 1)]);
    Ok(SectorProblem { sector: Sector::Unitary(segment, parity), dim, indices, matrix: m, exact_integrals: exact, coupling })
}

/// Unitary matrix over all `n = 1..=n_max`, both parities, before the
/// block split. Cross-parity entries are zero.
pub fn unitary_full_matrix(segment: Segment, n_max: usize, exact: bool, coupling: f64) -> Result<Mat> {
    let scale = coupling / TABLE_COUPLING;
    let (c, pref, diag_lin, diag_const, off) = match segment {
        Segment::Low => (1.5, 3.0 / (4.0 * PI), 9.0 / 8.0, 3f64.sqrt() / (4.0 * PI), 9.0 / 8.0),
        Segment::High => (3.0, 3.0 / (2.0 * PI), 4.5, -3f64.sqrt() / (2.0 * PI), 4.5),
    };
    let mut m = Mat::zeros(n_max, n_max);
    for n in 1..=n_max {
        for k in 1..=n_max {
            if (n + k) % 2 == 1 {
                continue;
            }
            let v = if exact {
                scale * pref * il_integral(n, k, IntegralMode::Digamma, segment)?
            } else if n == k {
                scale * (diag_lin * n as f64 + diag_const)
            } else {
                scale * off * n.min(k) as f64
            };
            m[(n - 1, k - 1)] = v;
        }
        m[(n - 1, n - 1)] += (c * n as f64).powi(2);
    }
    Ok(m)
}

/// One angular eigenmode.
#[derive(Clone, Debug, Serialize)]
pub struct AngularMode {
    pub sector: Sector,
    /// Label: Fourier index of the dominant coefficient.
    pub l: usize,
    pub b: f64,
    pub b2: f64,
    pub coeffs: Vec<f64>,
    pub indices: Vec<usize>,
    pub delta_b: f64,
    pub delta_psi_norm: f64,
    /// Position of the dominant coefficient inside the block.
    pub dominant: usize,
}

impl AngularMode {
    /// `Φ(φ) = Σ a_k sin(freq · n_k · φ)`.
    pub fn evaluate(&self, phi: f64) -> f64 {
        let w = self.sector.frequency();
        self.coeffs.iter().zip(&self.indices).map(|(a, &n)| a * (w * n as f64 * phi).sin()).sum()
    }

    pub fn derivative(&self, phi: f64) -> f64 {
        let w = self.sector.frequency();
        self.coeffs
            .iter()
            .zip(&self.indices)
            .map(|(a, &n)| a * w * n as f64 * (w * n as f64 * phi).cos())
            .sum()
    }

    pub fn dominant_coefficient(&self) -> f64 {
        self.coeffs[self.dominant]
    }
}

/// Eigen-decompose a block. Modes are ascending in `b`; those whose
/// dominant index lies in the top `dim/5` of the block are dropped.
pub fn solve_modes(p: &SectorProblem) -> Result<Vec<AngularMode>> {
    let eig = sym_eig(&p.matrix, DEFAULT_EIG_TOL)?;
    let guard = p.dim - p.dim / 5;
    let mut out = Vec::new();
    for (k, &b2) in eig.values.iter().enumerate() {
        if b2 < 0.0 {
            if matches!(p.sector, Sector::Orthogonal(_)) && b2 < -NEGATIVE_TOL {
                return Err(Error::NegativeEigenvalue { value: b2, sector: "orthogonal" });
            }
            continue;
        }
        let col = eig.vectors.column(k);
        // ties go to the smaller index
        let mut dom = 0;
        for i in 1..p.dim {
            if col[i].abs() > col[dom].abs() {
                dom = i;
            }
        }
        if dom >= guard {
            continue;
        }
        let sign = col[dom].signum();
        let coeffs: Vec<f64> = col.iter().map(|x| sign * x).collect();
        let l = p.indices[dom];
        let b = b2.sqrt();
        let a = coeffs[dom];
        out.push(AngularMode {
            sector: p.sector,
            l,
            b,
            b2,
            delta_b: b - p.sector.baseline(l),
            delta_psi_norm: (1.0 - a * a).max(0.0).sqrt(),
            coeffs,
            indices: p.indices.clone(),
            dominant: dom,
        });
    }
    Ok(out)
}

/// Find the mode labelled `l` among solved modes.
pub fn mode_with_label(modes: &[AngularMode], l: usize) -> Result<&AngularMode> {
    modes
        .iter()
        .find(|m| m.l == l)
        .ok_or_else(|| Error::InvalidArgument(format!("no reported mode with label l = {l}")))
}

/// Orthogonal table row: `p, δb_{2p−1}, |δψ_{2p−1}|, δb_{2p}, |δψ_{2p}|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OrthogonalRow {
    pub p: usize,
    pub delta_b_odd: f64,
    pub delta_psi_odd: f64,
    pub delta_b_even: f64,
    pub delta_psi_even: f64,
}

/// Unitary table row: `l, δb^L, δb^H, |δψ|` (`|δψ^H|` kept for checks).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UnitaryRow {
    pub l: usize,
    pub delta_b_low: f64,
    pub delta_b_high: f64,
    pub delta_psi: f64,
    pub delta_psi_high: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ReferenceTable {
    Orthogonal(Vec<OrthogonalRow>),
    Unitary(Vec<UnitaryRow>),
}

/// Number of rows in the printed tables.
pub const TABLE_ROWS: usize = 10;

/// Unrounded table values for `rows` rows at truncation `dim`.
pub fn reference_tables(class: ClassKind, dim: usize, rows: usize, exact: bool) -> Result<ReferenceTable> {
    match class {
        ClassKind::Orthogonal => {
            let odd = solve_modes(&orthogonal_sector_matrix(Parity::Odd, dim)?)?;
            let even = solve_modes(&orthogonal_sector_matrix(Parity::Even, dim)?)?;
            let mut out = Vec::with_capacity(rows);
            for p in 1..=rows {
                let o = mode_with_label(&odd, 2 * p - 1)?;
                let e = mode_with_label(&even, 2 * p)?;
                out.push(OrthogonalRow {
                    p,
                    delta_b_odd: o.delta_b,
                    delta_psi_odd: o.delta_psi_norm,
                    delta_b_even: e.delta_b,
                    delta_psi_even: e.delta_psi_norm,
                });
            }
            Ok(ReferenceTable::Orthogonal(out))
        }
        ClassKind::Unitary => {
            let mut solved = Vec::new();
            for seg in [Segment::Low, Segment::High] {
                for par in [Parity::Odd, Parity::Even] {
                    solved.push(((seg, par), solve_modes(&unitary_sector_matrix(seg, par, dim, exact)?)?));
                }
            }
            let find = |seg: Segment, l: usize| -> Result<&AngularMode> {
                let (_, modes) = solved.iter().find(|((s, p), _)| *s == seg && *p == Parity::of(l)).expect("all blocks solved");
                mode_with_label(modes, l)
            };
            let mut out = Vec::with_capacity(rows);
            for l in 1..=rows {
                let lo = find(Segment::Low, l)?;
                let hi = find(Segment::High, l)?;
                out.push(UnitaryRow {
                    l,
                    delta_b_low: lo.delta_b,
                    delta_b_high: hi.delta_b,
                    delta_psi: lo.delta_psi_norm,
                    delta_psi_high: hi.delta_psi_norm,
                });
            }
            Ok(ReferenceTable::Unitary(out))
        }
    }
}

/// Round to two decimals, the precision of the printed tables.
pub fn round2(x: f64) -> f64 {
    let r = (x * 100.0).round() / 100.0;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Values of the printed tables at two decimals.
pub fn printed_orthogonal_table() -> [[f64; 4]; TABLE_ROWS] {
    [
        [-0.39, 0.12, -0.38, 0.15],
        [-0.38, 0.20, -0.37, 0.22],
        [-0.37, 0.24, -0.36, 0.25],
        [-0.36, 0.25, -0.36, 0.26],
        [-0.36, 0.26, -0.35, 0.26],
        [-0.35, 0.27, -0.35, 0.27],
        [-0.35, 0.27, -0.35, 0.27],
        [-0.34, 0.27, -0.34, 0.27],
        [-0.34, 0.27, -0.34, 0.27],
        [-0.34, 0.27, -0.34, 0.27],
    ]
}

/// See [`printed_orthogonal_table`]; columns `δb^L, δb^H, |δψ|`.
pub fn printed_unitary_table() -> [[f64; 3]; TABLE_ROWS] {
    [
        [0.35, 0.58, 0.05],
        [0.33, 0.60, 0.07],
        [0.33, 0.61, 0.10],
        [0.32, 0.61, 0.11],
        [0.32, 0.61, 0.12],
        [0.32, 0.61, 0.13],
        [0.32, 0.62, 0.14],
        [0.32, 0.62, 0.14],
        [0.32, 0.62, 0.14],
        [0.32, 0.62, 0.15],
    ]
}

/// Half-integer solution `√|sin φ| (A P_l(cos φ) + B Q_l(cos φ))` with
/// `b = l + ½`.
#[derive(Clone, Debug)]
pub struct HalfIntegerBranch {
    pub l: usize,
    pub b: f64,
    pub phi: Vec<f64>,
    pub values: Vec<Complex64>,
    /// `Im(ψ* ψ')` on the grid (central differences).
    pub current: Vec<f64>,
    /// `|j(0⁺) − j(0⁻)|` from one-sided differences at `±δ`.
    pub jump_at_zero: f64,
    /// Same at `π`.
    pub jump_at_pi: f64,
}

/// Evaluate the half-integer branch on `grid`, which must stay `δ` away
/// from every multiple of `π`.
pub fn half_integer_branch(
    l: usize,
    a: Complex64,
    b: Complex64,
    grid: &[f64],
    delta: f64,
) -> Result<HalfIntegerBranch> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::InvalidArgument(format!("half_integer_branch: δ = {delta} outside (0, 0.5)")));
    }
    for &phi in grid {
        let k = (phi / PI).round();
        if (phi - k * PI).abs() < delta {
            return Err(Error::InvalidArgument(format!("half_integer_branch: φ = {phi} within δ of a singular point")));
        }
    }
    let psi = |phi: f64| -> Result<Complex64> {
        let x = phi.cos();
        let s = phi.sin().abs().sqrt();
        Ok(s * (a * legendre(l, 0, x, LegendreKind::P)? + b * legendre(l, 0, x, LegendreKind::Q)?))
    };
    let h = 1e-6 * delta.min(1e-2) / 1e-2;
    let current_central = |phi: f64| -> Result<f64> {
        let d = (psi(phi + h)? - psi(phi - h)?) / (2.0 * h);
        Ok((psi(phi)?.conj() * d).im)
    };
    // one-sided: forward on the right of a singular point, backward on the left
    let current_side = |phi: f64, forward: bool| -> Result<f64> {
        let (p0, p1, p2) = if forward {
            (psi(phi)?, psi(phi + h)?, psi(phi + 2.0 * h)?)
        } else {
            (psi(phi)?, psi(phi - h)?, psi(phi - 2.0 * h)?)
        };
        let mut d = (-3.0 * p0 + 4.0 * p1 - p2) / (2.0 * h);
        if !forward {
            d = -d;
        }
        Ok((p0.conj() * d).im)
    };
    let jump = |at: f64| -> Result<f64> { Ok((current_side(at + delta, true)? - current_side(at - delta, false)?).abs()) };
    let values = grid.iter().map(|&p| psi(p)).collect::<Result<Vec<_>>>()?;
    let current = grid.iter().map(|&p| current_central(p)).collect::<Result<Vec<_>>>()?;
    Ok(HalfIntegerBranch {
        l,
        b: l as f64 + 0.5,
        phi: grid.to_vec(),
        values,
        current,
        jump_at_zero: jump(0.0)?,
        jump_at_pi: jump(PI)?,
    })
}

/// Potential of the angular equation at coupling `c`: `−c/sin²φ`
/// (orthogonal, attractive) or `c/sin²φ + c/sin²(φ − 2π/3)` (unitary).
pub fn sector_potential(class: ClassKind, coupling: f64, phi: f64) -> f64 {
    let s = phi.sin();
    match class {
        ClassKind::Orthogonal => -coupling / (s * s),
        ClassKind::Unitary => {
            let t = (phi - 2.0 * PI / 3.0).sin();
            coupling / (s * s) + coupling / (t * t)
        }
    }
}

/// Curves for plotting: `φ`, potential, then one column per mode.
#[derive(Clone, Debug, Serialize)]
pub struct FigureData {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// `(column, l, b, |δψ|)` of each plotted mode.
    pub modes: Vec<(String, usize, f64, f64)>,
}

/// Figure curves on a uniform grid of `points` nodes. Orthogonal: modes
/// `l = 1..=n_modes` on `[0, π]`. Unitary: low modes on `[0, 2π/3]` and high
/// modes on `[2π/3, π]`, each zero outside its segment. The potential is
/// `NaN` at its singular points.
pub fn figure_data(class: ClassKind, dim: usize, n_modes: usize, points: usize) -> Result<FigureData> {
    if points < 3 {
        return Err(Error::InvalidArgument(format!("figure_data: {points} points")));
    }
    let mut plotted: Vec<(String, AngularMode, (f64, f64))> = Vec::new();
    match class {
        ClassKind::Orthogonal => {
            let odd = solve_modes(&orthogonal_sector_matrix(Parity::Odd, dim)?)?;
            let even = solve_modes(&orthogonal_sector_matrix(Parity::Even, dim)?)?;
            for l in 1..=n_modes {
                let src = if l % 2 == 1 { &odd } else { &even };
                plotted.push((format!("psi_{l}"), mode_with_label(src, l)?.clone(), (0.0, PI)));
            }
        }
        ClassKind::Unitary => {
            for seg in [Segment::Low, Segment::High] {
                let tag = if seg == Segment::Low { "L" } else { "H" };
                for par in [Parity::Odd, Parity::Even] {
                    let modes = solve_modes(&unitary_sector_matrix(seg, par, dim, false)?)?;
                    for l in (1..=n_modes).filter(|&l| Parity::of(l) == par) {
                        plotted.push((format!("psi_{tag}_{l}"), mode_with_label(&modes, l)?.clone(), seg.range()));
                    }
                }
            }
            plotted.sort_by(|a, b| a.0.cmp(&b.0));
        }
    }
    let mut columns = vec!["phi".to_string(), "potential".to_string()];
    columns.extend(plotted.iter().map(|p| p.0.clone()));
    let step = PI / (points - 1) as f64;
    let rows = (0..points)
        .map(|i| {
            let phi = i as f64 * step;
            let v = sector_potential(class, TABLE_COUPLING, phi);
            let mut row = vec![phi, if v.is_finite() && v.abs() < 1e12 { v } else { f64::NAN }];
            for (_, m, (lo, hi)) in &plotted {
                row.push(if phi >= *lo - 1e-12 && phi <= *hi + 1e-12 { m.evaluate(phi) } else { 0.0 });
            }
            row
        })
        .collect();
    let modes = plotted.iter().map(|(c, m, _)| (c.clone(), m.l, m.b, m.delta_psi_norm)).collect();
    Ok(FigureData { columns, rows, modes })
}
