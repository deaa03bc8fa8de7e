//! Free matrix flow `X(t) = X₀ + tY₀` against the reduced spin
//! Calogero-Moser equations, for a few seeds.

use cmlab::liealg::{ClassKind, SymmetryClass};
use cmlab::matrixflow::{cross_check, sample_free_state, FlowOptions};

fn main() -> cmlab::Result<()> {
    println!("class       N  seed  max|x_free - x_rk4|  H drift   TrL2 drift");
    for kind in [ClassKind::Orthogonal, ClassKind::Unitary] {
        for n in [3, 4] {
            for seed in [7, 11, 13] {
                let s0 = sample_free_state(SymmetryClass::new(kind, n)?, seed, 0.1)?;
                let rep = cross_check(&s0, 1.0, 10_000, 20, FlowOptions::default(), 1e-6)?;
                println!(
                    "{:<10} {n:2} {seed:5}  {:18.2e}  {:8.1e}  {:8.1e}",
                    kind.to_string(),
                    rep.max_discrepancy,
                    rep.drift.hamiltonian,
                    rep.drift.tr_l2
                );
            }
        }
    }
    // harmonic confinement: X(t) = X₀ cos ωt + (Y₀/ω) sin ωt
    let s0 = sample_free_state(SymmetryClass::unitary(3), 7, 0.1)?;
    let opts = FlowOptions { omega: 1.5, ..FlowOptions::default() };
    let rep = cross_check(&s0, 1.0, 10_000, 20, opts, 1e-6)?;
    println!("harmonic ω = 1.5: discrepancy {:.2e}", rep.max_discrepancy);
    Ok(())
}
