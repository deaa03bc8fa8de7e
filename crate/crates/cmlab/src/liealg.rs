//! Generator bases, structure constants, adjoint action, group elements and
//! the defining representation of `so(N)` / `su(N)`.
//!
//! Generators are normalized as
//!
//! ```text
//! τ_ij = ½ (E_ij − E_ji)        i < j
//! τ_ij = (i/2)(E_ij + E_ji)     i > j   (unitary only)
//! ```
//!
//! so `Tr(τ_a τ_b) = −½ δ_ab`. The chart coordinates live on the pair set
//! `I` (`i < j` for orthogonal, `i ≠ j` for unitary). The off-diagonal
//! unitary generators do not close under commutation, so the unitary
//! algebra additionally carries the `N` Cartan generators
//! `τ_kk = (i/√2) E_kk`, placed after the pairs. Structure constants and
//! adjoint matrices are always over the closed algebra (`u(N)`); chart
//! vectors of length `d` are zero-padded on the Cartan slots.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{CMat, Error, Mat, Result};

/// Tolerance below which a structure constant is treated as zero.
const F_ZERO: f64 = 1e-13;
/// Truncation tolerance of the exponential series.
pub const EXP_TOL: f64 = 1e-14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Orthogonal,
    Unitary,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Orthogonal => "orthogonal",
            ClassKind::Unitary => "unitary",
        })
    }
}

impl FromStr for ClassKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "orthogonal" | "o" | "so" => Ok(ClassKind::Orthogonal),
            "unitary" | "u" | "su" => Ok(ClassKind::Unitary),
            other => Err(format!("unknown class `{other}` (expected orthogonal or unitary)")),
        }
    }
}

/// Symmetry class together with the particle count `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymmetryClass {
    kind: ClassKind,
    n: usize,
}

impl SymmetryClass {
    pub fn new(kind: ClassKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("particle count N = {n} must be at least 2")));
        }
        Ok(Self { kind, n })
    }

    /// # Panics
    /// If `n < 2`.
    pub fn orthogonal(n: usize) -> Self {
        Self::new(ClassKind::Orthogonal, n).expect("N >= 2")
    }

    /// # Panics
    /// If `n < 2`.
    pub fn unitary(n: usize) -> Self {
        Self::new(ClassKind::Unitary, n).expect("N >= 2")
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// α = 1 (orthogonal) or 2 (unitary).
    pub fn alpha(&self) -> u32 {
        match self.kind {
            ClassKind::Orthogonal => 1,
            ClassKind::Unitary => 2,
        }
    }

    pub fn is_unitary(&self) -> bool {
        self.kind == ClassKind::Unitary
    }

    /// Pair set `I`, zero-based, lexicographic.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..n {
            for j in 0..n {
                let keep = match self.kind {
                    ClassKind::Orthogonal => i < j,
                    ClassKind::Unitary => i != j,
                };
                if keep {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Chart dimension `d = |I|`.
    pub fn dim(&self) -> usize {
        let half = self.n * (self.n - 1) / 2;
        match self.kind {
            ClassKind::Orthogonal => half,
            ClassKind::Unitary => 2 * half,
        }
    }

    /// Dimension of the closed algebra: `d` for orthogonal, `N²` for unitary.
    pub fn algebra_dim(&self) -> usize {
        match self.kind {
            ClassKind::Orthogonal => self.dim(),
            ClassKind::Unitary => self.n * self.n,
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} N={}", self.kind, self.n)
    }
}

/// Label of one algebra generator (zero-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Pair(usize, usize),
    Cartan(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Pair(i, j) => write!(f, "({}{})", i + 1, j + 1),
            Generator::Cartan(k) => write!(f, "({}{})", k + 1, k + 1),
        }
    }
}

/// Generator matrices: the `d` chart generators first, then (unitary) the
/// Cartan generators.
#[derive(Clone, Debug)]
pub struct GeneratorBasis {
    class: SymmetryClass,
    labels: Vec<Generator>,
    tau: Vec<CMat>,
}

impl GeneratorBasis {
    pub fn class(&self) -> SymmetryClass {
        self.class
    }

    pub fn chart_dim(&self) -> usize {
        self.class.dim()
    }

    pub fn algebra_dim(&self) -> usize {
        self.tau.len()
    }

    pub fn labels(&self) -> &[Generator] {
        &self.labels
    }

    /// All generator matrices in algebra order.
    pub fn matrices(&self) -> &[CMat] {
        &self.tau
    }

    /// The chart generators `τ_(ij)`, `(ij) ∈ I`.
    pub fn chart_matrices(&self) -> &[CMat] {
        &self.tau[..self.chart_dim()]
    }

    pub fn tau(&self, index: usize) -> &CMat {
        &self.tau[index]
    }

    pub fn index_of(&self, g: Generator) -> Option<usize> {
        self.labels.iter().position(|&x| x == g)
    }

    /// Zero-pad a chart vector to algebra length; algebra-length input is
    /// returned unchanged.
    pub fn pad(&self, a: &[f64]) -> Result<Vec<f64>> {
        pad_to(a, self.chart_dim(), self.algebra_dim())
    }

    /// `Σ_k a_k τ_k` for a chart- or algebra-length vector.
    pub fn combination(&self, a: &[f64]) -> Result<CMat> {
        let a = self.pad(a)?;
        let n = self.class.n();
        let mut x = CMat::zeros(n, n);
        for (coef, t) in a.iter().zip(&self.tau) {
            if *coef != 0.0 {
                x += t * Complex64::new(*coef, 0.0);
            }
        }
        Ok(x)
    }
}

fn pad_to(a: &[f64], chart: usize, algebra: usize) -> Result<Vec<f64>> {
    if a.len() == algebra {
        Ok(a.to_vec())
    } else if a.len() == chart {
        let mut v = a.to_vec();
        v.resize(algebra, 0.0);
        Ok(v)
    } else {
        Err(Error::DimensionMismatch { expected: chart, got: a.len() })
    }
}

fn unit(n: usize, i: usize, j: usize) -> CMat {
    let mut e = CMat::zeros(n, n);
    e[(i, j)] = Complex64::new(1.0, 0.0);
    e
}

/// Build the normalized generator basis of `class`.
pub fn build_generator_basis(class: SymmetryClass) -> GeneratorBasis {
    let n = class.n();
    let half = Complex64::new(0.5, 0.0);
    let ihalf = Complex64::new(0.0, 0.5);
    let mut labels = Vec::with_capacity(class.algebra_dim());
    let mut tau = Vec::with_capacity(class.algebra_dim());
    for (i, j) in class.pairs() {
        let m = if i < j {
            (unit(n, i, j) - unit(n, j, i)) * half
        } else {
            (unit(n, i, j) + unit(n, j, i)) * ihalf
        };
        labels.push(Generator::Pair(i, j));
        tau.push(m);
    }
    if class.is_unitary() {
        for k in 0..n {
            labels.push(Generator::Cartan(k));
            tau.push(unit(n, k, k) * Complex64::new(0.0, FRAC_1_SQRT_2));
        }
    }
    GeneratorBasis { class, labels, tau }
}

/// Sparse structure constants `f^c_{ab}` with `[τ_a, τ_b] = Σ_c f^c_{ab} τ_c`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    chart_dim: usize,
    dim: usize,
    entries: BTreeMap<(usize, usize), Vec<(usize, f64)>>,
}

impl StructureConstants {
    /// Algebra dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn chart_dim(&self) -> usize {
        self.chart_dim
    }

    /// `f^c_{ab}`.
    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.entries
            .get(&(a, b))
            .and_then(|v| v.iter().find(|(k, _)| *k == c).map(|(_, x)| *x))
            .unwrap_or(0.0)
    }

    /// Non-zero terms of `[τ_a, τ_b]`.
    pub fn terms(&self, a: usize, b: usize) -> &[(usize, f64)] {
        self.entries.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    /// Dense copy, index `(a * dim + b) * dim + c`.
    pub fn to_dense(&self) -> Vec<f64> {
        let d = self.dim;
        let mut out = vec![0.0; d * d * d];
        for (&(a, b), terms) in &self.entries {
            for &(c, x) in terms {
                out[(a * d + b) * d + c] = x;
            }
        }
        out
    }

    /// Largest entrywise difference to another set of constants.
    pub fn max_abs_difference(&self, other: &StructureConstants) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        self.to_dense().iter().zip(other.to_dense()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    /// Largest Jacobi-identity residual
    /// `|Σ_e f^e_{ab} f^g_{ec} + f^e_{bc} f^g_{ea} + f^e_{ca} f^g_{eb}|`.
    pub fn jacobi_residual(&self) -> f64 {
        let d = self.dim;
        let f = self.to_dense();
        let at = |a: usize, b: usize, c: usize| f[(a * d + b) * d + c];
        let mut worst = 0.0_f64;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for g in 0..d {
                        let mut s = 0.0;
                        for e in 0..d {
                            s += at(a, b, e) * at(e, c, g) + at(b, c, e) * at(e, a, g) + at(c, a, e) * at(e, b, g);
                        }
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    fn from_dense(chart_dim: usize, dim: usize, dense: &[f64]) -> Self {
        let mut entries = BTreeMap::new();
        for a in 0..dim {
            for b in 0..dim {
                let terms: Vec<(usize, f64)> = (0..dim)
                    .filter_map(|c| {
                        let x = dense[(a * dim + b) * dim + c];
                        (x.abs() > F_ZERO).then_some((c, x))
                    })
                    .collect();
                if !terms.is_empty() {
                    entries.insert((a, b), terms);
                }
            }
        }
        Self { chart_dim, dim, entries }
    }
}

/// `f^c_{ab} = −2 Tr([τ_a, τ_b] τ_c)`.
pub fn structure_constants(basis: &GeneratorBasis) -> StructureConstants {
    let d = basis.algebra_dim();
    let tau = basis.matrices();
    let mut dense = vec![0.0; d * d * d];
    for a in 0..d {
        for b in 0..d {
            let comm = &tau[a] * &tau[b] - &tau[b] * &tau[a];
            for c in 0..d {
                dense[(a * d + b) * d + c] = -2.0 * (&comm * &tau[c]).trace().re;
            }
        }
    }
    StructureConstants::from_dense(basis.chart_dim(), d, &dense)
}

/// Structure constants from the Poisson brackets of the `L` variables.
///
/// Orthogonal: `{L_ij, L_kl} = ½(δ_kj L_il − δ_il L_kj − δ_jl L_ik + δ_ik L_lj)`
/// with `L` antisymmetric and `L_ij ↔ τ_ij`.
/// Unitary: `{L_ij, L_kl} = δ_kj L_il − δ_il L_kj` on the `gl(N)` symbols,
/// with `ℓ_a = Σ (τ_a)_ij L_ij`; the resulting symbol array is decomposed
/// back onto the basis through the real Gram system of the generators.
pub fn structure_constants_from_brackets(class: SymmetryClass) -> StructureConstants {
    let basis = build_generator_basis(class);
    let n = class.n();
    let d = basis.algebra_dim();
    let mut dense = vec![0.0; d * d * d];
    match class.kind() {
        ClassKind::Orthogonal => {
            let delta = |x: usize, y: usize| if x == y { 1.0 } else { 0.0 };
            let labels = basis.labels();
            for (a, ga) in labels.iter().enumerate() {
                for (b, gb) in labels.iter().enumerate() {
                    let (Generator::Pair(i, j), Generator::Pair(k, l)) = (*ga, *gb) else {
                        unreachable!("orthogonal basis has only pair generators")
                    };
                    let mut sym = vec![0.0; n * n];
                    let mut add = |x: usize, y: usize, c: f64| {
                        if x != y {
                            sym[x * n + y] += c;
                            sym[y * n + x] -= c;
                        }
                    };
                    add(i, l, 0.5 * delta(k, j));
                    add(k, j, -0.5 * delta(i, l));
                    add(i, k, -0.5 * delta(j, l));
                    add(l, j, 0.5 * delta(i, k));
                    for (c, gc) in labels.iter().enumerate() {
                        if let Generator::Pair(x, y) = *gc {
                            dense[(a * d + b) * d + c] = sym[x * n + y];
                        }
                    }
                }
            }
        }
        ClassKind::Unitary => {
            let tau = basis.matrices();
            let flat = |m: &CMat| -> Vec<f64> {
                let mut v = Vec::with_capacity(2 * n * n);
                for z in m.iter() {
                    v.push(z.re);
                    v.push(z.im);
                }
                v
            };
            let basis_vecs: Vec<Vec<f64>> = tau.iter().map(flat).collect();
            let mut gram = Mat::zeros(d, d);
            for c in 0..d {
                for e in 0..d {
                    gram[(c, e)] = basis_vecs[c].iter().zip(&basis_vecs[e]).map(|(x, y)| x * y).sum();
                }
            }
            let lu = gram.lu();
            for a in 0..d {
                for b in 0..d {
                    // {ℓ_a, ℓ_b} = Σ (τ_a)_ij (τ_b)_kl {L_ij, L_kl}
                    let mut sym = CMat::zeros(n, n);
                    for i in 0..n {
                        for j in 0..n {
                            let ta = tau[a][(i, j)];
                            if ta == Complex64::new(0.0, 0.0) {
                                continue;
                            }
                            for k in 0..n {
                                for l in 0..n {
                                    let tb = tau[b][(k, l)];
                                    if tb == Complex64::new(0.0, 0.0) {
                                        continue;
                                    }
                                    let w = ta * tb;
                                    if k == j {
                                        sym[(i, l)] += w;
                                    }
                                    if i == l {
                                        sym[(k, j)] -= w;
                                    }
                                }
                            }
                        }
                    }
                    let v = flat(&sym);
                    let rhs = nalgebra::DVector::from_iterator(
                        d,
                        basis_vecs.iter().map(|bv| bv.iter().zip(&v).map(|(x, y)| x * y).sum::<f64>()),
                    );
                    let coef = lu.solve(&rhs).expect("generator Gram matrix is invertible");
                    for c in 0..d {
                        dense[(a * d + b) * d + c] = coef[c];
                    }
                }
            }
        }
    }
    StructureConstants::from_dense(class.dim(), d, &dense)
}

/// Adjoint contraction `A_lm = Σ_k a_k f^m_{kl}` over the closed algebra.
/// `a` may have chart length (zero-padded) or algebra length.
pub fn adjoint_matrix(f: &StructureConstants, a: &[f64]) -> Result<Mat> {
    let a = pad_to(a, f.chart_dim(), f.dim())?;
    let d = f.dim();
    let mut m = Mat::zeros(d, d);
    for (k, &ak) in a.iter().enumerate() {
        if ak == 0.0 {
            continue;
        }
        for l in 0..d {
            for &(c, x) in f.terms(k, l) {
                m[(l, c)] += ak * x;
            }
        }
    }
    Ok(m)
}

/// `u(A) = Σ_{n≥0} Aⁿ/(n+1)!`, summed until the term norm drops below `tol`.
pub fn u_of_a(a: &Mat, tol: f64) -> Result<Mat> {
    let d = a.nrows();
    if a.ncols() != d {
        return Err(Error::DimensionMismatch { expected: d, got: a.ncols() });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("u_of_A: tol = {tol} must be positive")));
    }
    let mut term = Mat::identity(d, d);
    let mut sum = term.clone();
    for n in 1..10_000 {
        term = &term * a / (n as f64 + 1.0);
        sum += &term;
        let norm = term.norm();
        if !norm.is_finite() {
            return Err(Error::NonFinite { t: n as f64, index: 0 });
        }
        if norm < tol {
            break;
        }
    }
    Ok(sum)
}

/// Matrix exponential by scaling and squaring of the truncated Taylor series.
pub fn expm(x: &CMat, tol: f64) -> CMat {
    let n = x.nrows();
    let norm1 = (0..n).map(|j| x.column(j).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max);
    let mut s = 0;
    while norm1 / 2f64.powi(s) > 0.5 {
        s += 1;
    }
    let scaled = x * Complex64::new(2f64.powi(-s), 0.0);
    let mut term = CMat::identity(n, n);
    let mut sum = term.clone();
    for k in 1..200 {
        term = &term * &scaled * Complex64::new(1.0 / k as f64, 0.0);
        sum += &term;
        if term.norm() < tol {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

/// `U = exp(Σ a_k τ_k)`; chart- or algebra-length `a`.
pub fn group_element(basis: &GeneratorBasis, a: &[f64]) -> Result<CMat> {
    Ok(expm(&basis.combination(a)?, EXP_TOL))
}

/// Defining representation `L_a` (Hermitian, `N×N`), in algebra order.
///
/// ```text
/// L_ij = (iħ/2)(E_ij − E_ji)   i < j
/// L_ij = (ħ/2)(E_ij + E_ji)    i > j
/// L_kk = (ħ/√2) E_kk           Cartan (unitary)
/// ```
///
/// This is `iħ` times the automorphism `τ ↦ −τᵀ` of the generators, so
/// `[L_a, L_b] = iħ Σ_c f^c_{ab} L_c`.
#[derive(Clone, Debug)]
pub struct DefiningRep {
    class: SymmetryClass,
    hbar: f64,
    l: Vec<CMat>,
}

pub fn defining_rep(class: SymmetryClass, hbar: f64) -> Result<DefiningRep> {
    if !(hbar > 0.0) {
        return Err(Error::InvalidArgument(format!("hbar = {hbar} must be positive")));
    }
    let basis = build_generator_basis(class);
    let ih = Complex64::new(0.0, hbar);
    let l = basis
        .labels()
        .iter()
        .zip(basis.matrices())
        .map(|(g, t)| match g {
            Generator::Pair(i, j) if i < j => t * ih,
            _ => t * (-ih),
        })
        .collect();
    Ok(DefiningRep { class, hbar, l })
}

impl DefiningRep {
    pub fn class(&self) -> SymmetryClass {
        self.class
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// All `L` matrices in algebra order.
    pub fn matrices(&self) -> &[CMat] {
        &self.l
    }

    /// The `L_(ij)` for `(ij) ∈ I`.
    pub fn chart_matrices(&self) -> &[CMat] {
        &self.l[..self.class.dim()]
    }

    /// `max ‖[L_a, L_b] − iħ Σ_c f^c_ab L_c‖`.
    pub fn commutator_residual(&self, f: &StructureConstants) -> f64 {
        let d = self.l.len();
        let ih = Complex64::new(0.0, self.hbar);
        let mut worst = 0.0_f64;
        for a in 0..d {
            for b in 0..d {
                let mut r = &self.l[a] * &self.l[b] - &self.l[b] * &self.l[a];
                for &(c, x) in f.terms(a, b) {
                    r -= &self.l[c] * (ih * x);
                }
                worst = worst.max(r.norm());
            }
        }
        worst
    }

    /// Largest off-diagonal magnitude over all `L_(ij)²`, `(ij) ∈ I`.
    pub fn square_offdiagonal(&self) -> f64 {
        let mut worst = 0.0_f64;
        for l in self.chart_matrices() {
            let sq = l * l;
            for i in 0..sq.nrows() {
                for j in 0..sq.ncols() {
                    if i != j {
                        worst = worst.max(sq[(i, j)].norm());
                    }
                }
            }
        }
        worst
    }

    /// Diagonal of the interaction operator
    /// `½ Σ_{(ij)∈I} (2 L²_ij + ħ²(α/2 − 1)) / (D_i − D_j)²` (m = 1),
    /// i.e. the potential seen by each of the `N` components.
    pub fn interaction_diagonal(&self, d: &[f64]) -> Result<Vec<f64>> {
        let n = self.class.n();
        if d.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: d.len() });
        }
        let shift = self.hbar * self.hbar * (f64::from(self.class.alpha()) / 2.0 - 1.0);
        let mut out = vec![0.0; n];
        for ((i, j), l) in self.class.pairs().into_iter().zip(self.chart_matrices()) {
            let gap = d[i] - d[j];
            if gap == 0.0 {
                return Err(Error::CollisionMargin(format!("D_{} = D_{}", i + 1, j + 1)));
            }
            let sq = l * l;
            for (c, o) in out.iter_mut().enumerate() {
                *o += 0.5 * (2.0 * sq[(c, c)].re + shift) / (gap * gap);
            }
        }
        Ok(out)
    }
}

/// Dense complex matrix helper: `[D, M]` for diagonal `D`.
pub(crate) fn diag_commutator(d: &[f64], m: &CMat) -> CMat {
    let n = d.len();
    DMatrix::from_fn(n, n, |i, j| m[(i, j)] * (d[i] - d[j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so2_single_generator() {
        let b = build_generator_basis(SymmetryClass::orthogonal(2));
        assert_eq!(b.algebra_dim(), 1);
        let t = b.tau(0);
        assert_eq!(t[(0, 1)], Complex64::new(0.5, 0.0));
        assert_eq!(t[(1, 0)], Complex64::new(-0.5, 0.0));
        let f = structure_constants(&b);
        assert_eq!(f.nonzero_count(), 0);
        assert_eq!(adjoint_matrix(&f, &[0.7]).unwrap(), Mat::zeros(1, 1));
    }

    #[test]
    fn su2_pair_generators() {
        let c = SymmetryClass::unitary(2);
        let b = build_generator_basis(c);
        assert_eq!(c.dim(), 2);
        assert_eq!(b.labels()[1], Generator::Pair(1, 0));
        let t = b.tau(1);
        assert_eq!(t[(0, 1)], Complex64::new(0.0, 0.5));
        assert_eq!(t[(1, 0)], Complex64::new(0.0, 0.5));
    }

    #[test]
    fn so3_sample_constant() {
        let c = SymmetryClass::orthogonal(3);
        let b = build_generator_basis(c);
        let f = structure_constants(&b);
        let i12 = b.index_of(Generator::Pair(0, 1)).unwrap();
        let i13 = b.index_of(Generator::Pair(0, 2)).unwrap();
        let i23 = b.index_of(Generator::Pair(1, 2)).unwrap();
        assert!((f.get(i12, i13, i23) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn pad_rejects_wrong_length() {
        let b = build_generator_basis(SymmetryClass::unitary(3));
        assert!(b.pad(&[0.0; 6]).is_ok());
        assert!(b.pad(&[0.0; 9]).is_ok());
        assert!(matches!(b.pad(&[0.0; 5]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn class_counts() {
        for n in 2..6 {
            let o = SymmetryClass::orthogonal(n);
            let u = SymmetryClass::unitary(n);
            assert_eq!(o.pairs().len(), o.dim());
            assert_eq!(u.pairs().len(), u.dim());
            assert_eq!(2 * o.dim() as u32, o.alpha() * (n * (n - 1)) as u32);
            assert_eq!(2 * u.dim() as u32, u.alpha() * (n * (n - 1)) as u32);
        }
        assert!(SymmetryClass::new(ClassKind::Unitary, 1).is_err());
    }
}
