//! Metric identities on random chart points: determinant, Gram
//! factorization, vanishing `F`, and the λ-commutator relation.

use cmlab::geometry::{seed_stream, Chart};
use cmlab::liealg::{ClassKind, SymmetryClass};

fn main() -> cmlab::Result<()> {
    println!("class       N   det       factor.   max|F|    max|ν+f|");
    for kind in [ClassKind::Orthogonal, ClassKind::Unitary] {
        for n in 2..=4 {
            let chart = Chart::new(SymmetryClass::new(kind, n)?);
            let mut worst = [0.0f64; 4];
            for seed in seed_stream(7, 25) {
                let row = chart.audit(seed, 1e-4)?;
                worst[0] = worst[0].max(row.residual_det);
                worst[1] = worst[1].max(row.residual_factorization);
                worst[2] = worst[2].max(row.max_f);
                worst[3] = worst[3].max(row.max_nu_plus_f);
            }
            println!(
                "{:<10} {n:2}  {:8.1e}  {:8.1e}  {:8.1e}  {:8.1e}",
                kind.to_string(),
                worst[0],
                worst[1],
                worst[2],
                worst[3]
            );
        }
    }
    Ok(())
}
