//! Generator basis and structure constants of so(3) and su(3).

use cmlab::liealg::{build_generator_basis, defining_rep, structure_constants, ClassKind, SymmetryClass};

fn main() -> cmlab::Result<()> {
    for kind in [ClassKind::Orthogonal, ClassKind::Unitary] {
        let class = SymmetryClass::new(kind, 3)?;
        let basis = build_generator_basis(class);
        let f = structure_constants(&basis);
        let rep = defining_rep(class, 1.0)?;
        println!(
            "{kind}: d = {}, algebra dim = {}, nonzero f = {}, Jacobi residual = {:.1e}, [L,L] residual = {:.1e}",
            basis.chart_dim(),
            basis.algebra_dim(),
            f.nonzero_count(),
            f.jacobi_residual(),
            rep.commutator_residual(&f),
        );
    }
    let so3 = build_generator_basis(SymmetryClass::orthogonal(3));
    let f = structure_constants(&so3);
    for (a, label) in so3.labels().iter().enumerate().take(so3.chart_dim()) {
        for b in 0..so3.chart_dim() {
            for &(c, v) in f.terms(a, b) {
                println!("[{label:?}, {:?}] = {v:+} {:?}", so3.labels()[b], so3.labels()[c]);
            }
        }
    }
    Ok(())
}
