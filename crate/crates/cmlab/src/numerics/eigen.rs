use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{CMat, Error, Mat, Result};

/// Default symmetry tolerance for [`sym_eig`].
pub const DEFAULT_EIG_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a real symmetric matrix.
///
/// `values` are ascending and column `k` of `vectors` belongs to
/// `values[k]`. Each column is normalized and its largest-magnitude
/// component is positive (ties go to the smaller index).
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Mat,
}

/// Cyclic Jacobi eigensolver for dense real symmetric matrices.
///
/// # Input
///
/// * `m` -- square matrix, symmetric to within `tol` (scaled by `max(1, max|m_ij|)`)
/// * `tol` -- symmetry tolerance
///
/// # Output
///
/// Ascending eigenvalues with orthonormal eigenvectors in the columns.
///
/// # Errors
///
/// Non-square or non-symmetric input, and non-convergence after the sweep cap.
pub fn sym_eig(m: &Mat, tol: f64) -> Result<EigenDecomposition> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: m.ncols() });
    }
    if n == 0 {
        return Ok(EigenDecomposition { values: vec![], vectors: Mat::zeros(0, 0) });
    }
    let scale = m.iter().fold(1.0_f64, |acc, x| acc.max(x.abs()));
    let mut asym = 0.0_f64;
    for i in 0..n {
        for j in 0..i {
            asym = asym.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    if asym > tol * scale {
        return Err(Error::NotSymmetric(asym));
    }

    // row-major working copies; a is symmetrized
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = 0.5 * (m[(i, j)] + m[(j, i)]);
        }
    }
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = f64::EPSILON * frob.max(f64::MIN_POSITIVE);
    let mut converged = false;
    let mut off;
    for _ in 0..MAX_SWEEPS {
        off = off_norm(&a, n);
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // skip rotations that cannot change the diagonal
                if apq.abs() < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        off = off_norm(&a, n);
        if off > target * 1e3 {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS, residual: off });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = Mat::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        let mut best = 0;
        for k in 0..n {
            if v[k * n + src].abs() > v[best * n + src].abs() {
                best = k;
            }
        }
        let sign = if v[best * n + src] < 0.0 { -1.0 } else { 1.0 };
        for k in 0..n {
            vectors[(k, col)] = sign * v[k * n + src];
        }
    }
    Ok(EigenDecomposition { values, vectors })
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    s.sqrt()
}

/// Eigenpairs of a complex Hermitian matrix: `h = W diag(values) W†`.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: CMat,
}

/// Hermitian eigensolver built on [`sym_eig`].
///
/// `H = A + iB` is embedded as the real symmetric `[[A, -B], [B, A]]`, whose
/// spectrum is that of `H` with every value doubled. Each doubled pair spans
/// `{z, i z}`, so the first vector of each pair gives a complex eigenvector.
/// Partners are removed by Gram-Schmidt against earlier vectors with the
/// same value, which also orthonormalizes genuinely degenerate eigenspaces.
/// Each complex column is rephased so its largest-magnitude entry is real
/// and positive.
pub fn hermitian_eig(h: &CMat, tol: f64) -> Result<HermitianEigen> {
    let n = h.nrows();
    if h.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: h.ncols() });
    }
    let mut emb = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            emb[(i, j)] = z.re;
            emb[(i + n, j + n)] = z.re;
            emb[(i, j + n)] = -z.im;
            emb[(i + n, j)] = z.im;
        }
    }
    let eig = sym_eig(&emb, tol)?;
    let mut values: Vec<f64> = Vec::with_capacity(n);
    let mut vectors: CMat = DMatrix::zeros(n, n);
    let mut taken: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for k in 0..2 * n {
        if taken.len() == n {
            break;
        }
        let mut z: Vec<Complex64> =
            (0..n).map(|i| Complex64::new(eig.vectors[(i, k)], eig.vectors[(i + n, k)])).collect();
        // project out earlier partners with (numerically) the same value
        for (prev, &val) in taken.iter().zip(values.iter()) {
            if (val - eig.values[k]).abs() <= 1e-9 * (1.0 + val.abs()) {
                let ov: Complex64 = prev.iter().zip(&z).map(|(p, x)| p.conj() * x).sum();
                for (x, p) in z.iter_mut().zip(prev) {
                    *x -= ov * p;
                }
            }
        }
        let norm = z.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm < 0.5 {
            continue; // the i·z partner of an already accepted vector
        }
        for x in z.iter_mut() {
            *x /= norm;
        }
        let mut best = 0;
        for i in 0..n {
            if z[i].norm() > z[best].norm() + 1e-14 {
                best = i;
            }
        }
        let phase = z[best].conj() / z[best].norm();
        for x in z.iter_mut() {
            *x *= phase;
        }
        values.push(eig.values[k]);
        taken.push(z);
    }
    if taken.len() != n {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS, residual: f64::NAN });
    }
    for (col, z) in taken.iter().enumerate() {
        for i in 0..n {
            vectors[(i, col)] = z[i];
        }
    }
    Ok(HermitianEigen { values, vectors })
}
