//! Numerical laboratory for the quantum reduction of the free Hermitian
//! matrix model to spin Calogero-Moser systems.
//!
//! Two symmetry classes are supported throughout: orthogonal (real
//! symmetric matrices, `so(N)`, α = 1) and unitary (Hermitian matrices,
//! `su(N)`, α = 2). Units are ħ = m = 1 unless a function takes `hbar`.
//!
//! Module map:
//!
//! - [`numerics`]: dense kernels and special functions
//! - [`liealg`]: generators, structure constants, group elements, the defining representation
//! - [`matrixflow`]: free matrix flow vs reduced (x, p, L) dynamics
//! - [`geometry`]: Jacobian, metric, determinant identity, F and λ-commutator checks
//! - [`spectra2`]: N = 2 plane-wave projections
//! - [`angular3`]: N = 3 angular eigenproblems and the reference tables
//! - [`separation`]: Jacobi coordinates, radial and centre-of-mass factors, PDE residuals
//! - [`report`] and [`cli`]: machine-readable output and the command-line front end

pub mod angular3;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod liealg;
pub mod matrixflow;
pub mod numerics;
pub mod report;
pub mod separation;
pub mod spectra2;

pub use error::{Error, Result};

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Dense real matrix.
pub type Mat = DMatrix<f64>;
/// Dense complex matrix.
pub type CMat = DMatrix<Complex64>;
