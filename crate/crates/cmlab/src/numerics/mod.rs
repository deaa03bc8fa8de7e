//! Dense kernels and special functions.
//!
//! Everything here is hand-written and self-contained: a cyclic Jacobi
//! eigensolver, Gauss-Legendre rules, a classical RK4 stepper, Bessel and
//! spherical Bessel functions, digamma, Legendre P/Q (associated), Hermite,
//! associated Laguerre and spherical harmonics. Inputs outside a function's
//! documented envelope are reported as [`Error::Envelope`](crate::Error),
//! never as a silent NaN.

mod bessel;
mod eigen;
mod gamma;
mod ode;
mod orthopoly;
mod quadrature;

pub use bessel::{bessel_j, spherical_bessel_j, BESSEL_MAX_ORDER, BESSEL_MAX_X};
pub use eigen::{hermitian_eig, sym_eig, EigenDecomposition, HermitianEigen, DEFAULT_EIG_TOL};
pub use gamma::{digamma, ln_gamma};
pub use ode::{rk4, rk4_observed};
pub use orthopoly::{hermite, laguerre, legendre, spherical_harmonic, LegendreKind, POLY_MAX_DEGREE};
pub use quadrature::{gauss_legendre, QuadratureRule};
