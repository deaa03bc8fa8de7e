//! Assemble full three-body eigenfunctions and check them against the
//! component Hamiltonian with a finite-difference Laplacian.

use cmlab::angular3::Segment;
use cmlab::liealg::ClassKind;
use cmlab::separation::{
    assemble_and_residual, com_factor, plane_wave_residual, radial_factor, residual_mode, segment_centre, ComRegime,
    GridSpec, Regime,
};

fn main() -> cmlab::Result<()> {
    let control = plane_wave_residual([0.7, -0.4, 0.2], [0.3, -0.1, 0.5], 10, 0.1, 1e-3)?;
    println!("plane-wave control: {control:.2e}");

    for class in [ClassKind::Orthogonal, ClassKind::Unitary] {
        let mode = residual_mode(class, Segment::Low, 1, 100)?;
        let grid = GridSpec::standard(segment_centre(class, Segment::Low));
        for (regime, com) in [
            (Regime::Free { k: 1.0 }, ComRegime::Free { k: 0.5 }),
            (Regime::Harmonic { nu: 0, omega: 1.0 }, ComRegime::Harmonic { n: 0, omega: 1.0 }),
        ] {
            let radial = radial_factor(3, mode.b, regime)?;
            let com = com_factor(3, com)?;
            let rep = assemble_and_residual(class, 2, &mode, &radial, &com, &grid, 1e-3)?;
            println!("{}", serde_json::to_string(&rep)?);
        }
    }
    Ok(())
}
