//! Special-function kernels next to closed forms.

use std::f64::consts::PI;

use cmlab::numerics::{bessel_j, digamma, gauss_legendre, hermite, laguerre, legendre, LegendreKind};

fn main() -> cmlab::Result<()> {
    let x = PI / 2.0;
    println!("J_1/2(π/2) = {:.15}  (2/π = {:.15})", bessel_j(0.5, x)?, 2.0 / PI);
    println!("J_0(20)    = {:.15}", bessel_j(0.0, 20.0)?);
    println!("ψ(1)       = {:.15}", digamma(1.0)?);
    println!("ψ(1/2)     = {:.15}  (ψ(1) - 2 ln 2 = {:.15})", digamma(0.5)?, digamma(1.0)? - 2.0 * 2f64.ln());
    println!("Q_0(0.5)   = {:.15}  (ln 3 / 2 = {:.15})", legendre(0, 0, 0.5, LegendreKind::Q)?, 0.5 * 3f64.ln());
    println!("P_1^1(0.5) = {:.15}", legendre(1, 1, 0.5, LegendreKind::P)?);
    println!("H_2(1.5)   = {}", hermite(2, 1.5)?);
    println!("L_1^½(2)   = {}", laguerre(1, 0.5, 2.0)?);
    let rule = gauss_legendre(8)?;
    println!("GL8 ∫x^14  = {:.15}  (2/15 = {:.15})", rule.integrate(-1.0, 1.0, |x| x.powi(14)), 2.0 / 15.0);
    Ok(())
}
