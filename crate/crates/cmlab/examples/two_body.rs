//! Two-particle plane waves projected on SO(2) and SU(2) angular modes.

use cmlab::spectra2::{energy_split, so2_project, so2_reference, su2_project, su2_reference, PlaneWaveParams};

fn main() -> cmlab::Result<()> {
    let k = PlaneWaveParams::orthogonal(1.3, -0.4, 0.8);
    let (e_cm, e_rel) = energy_split(&k);
    println!("orthogonal: κ = {:.6}, E_cm = {e_cm:.6}, E_rel = {e_rel:.6}", k.kappa());
    let grid = [0.5, 1.0, 2.0, 5.0, 10.0];
    for nu in [0, 1, 3] {
        let vals = so2_project(&k, nu as f64, &grid, 256)?;
        let err = grid
            .iter()
            .zip(&vals)
            .map(|(&r, v)| so2_reference(&k, nu, r).map(|f| (v - f).norm()))
            .collect::<cmlab::Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        println!("  ν = {nu}: max |ψ - 2π i^ν e^(iνφ) J_ν(κr)| = {err:.1e}");
    }

    let k = PlaneWaveParams::unitary(1.3, -0.4, 0.8, 0.5);
    println!("unitary: κ = {:.6}", k.kappa());
    for (l, m) in [(1, 0), (2, 1), (4, -3)] {
        let vals = su2_project(&k, l, m, &grid, 48)?;
        print!("  l = {l}, m = {m:+}: ψ/(P j) =");
        for (&r, v) in grid.iter().zip(&vals) {
            let q = v / su2_reference(&k, l, m, r)?;
            print!(" {:.6}{:+.6}i", q.re, q.im);
        }
        println!();
    }
    Ok(())
}
