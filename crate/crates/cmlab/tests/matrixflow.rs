use cmlab::liealg::{ClassKind, SymmetryClass};
use cmlab::matrixflow::*;
use cmlab::CMat;
use num_complex::Complex64;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn sampling_is_deterministic_and_gapped() {
    let class = SymmetryClass::orthogonal(3);
    let a = sample_free_state(class, 7, 0.1).unwrap();
    let b = sample_free_state(class, 7, 0.1).unwrap();
    assert_eq!(a.x, b.x);
    assert_eq!(a.y, b.y);
    assert!(a.x.iter().chain(a.y.iter()).all(|z| z.im == 0.0));
    assert_eq!(a.x, a.x.transpose());
    let s = spectrum(&a.x).unwrap();
    assert!(s.windows(2).all(|w| w[1] - w[0] >= 0.1));
}

#[test]
fn free_evolution() {
    let s = sample_free_state(SymmetryClass::unitary(3), 7, 0.1).unwrap();
    let s0 = free_evolve(&s, 0.0);
    assert_eq!(s0.x, s.x);
    let s1 = free_evolve(&s, 1.0);
    assert_eq!(s1.y, s.y);
    assert!((free_energy(&s1, 0.0) - free_energy(&s, 0.0)).abs() < 1e-13);
    let (e0, e1) = (spectrum(&s.x).unwrap(), spectrum(&s1.x).unwrap());
    assert!(e0.iter().zip(&e1).any(|(a, b)| (a - b).abs() > 1e-3));
}

#[test]
fn reduction_hamiltonian_identity() {
    for kind in [ClassKind::Orthogonal, ClassKind::Unitary] {
        for seed in 0..100 {
            let s = sample_free_state(SymmetryClass::new(kind, 4).unwrap(), seed, 0.05).unwrap();
            let r = reduce(&s, DEFAULT_GAP).unwrap();
            let half_tr_y2 = 0.5 * (&s.y * &s.y).trace().re;
            assert!((r.hamiltonian(0.0) - half_tr_y2).abs() < 1e-10 * half_tr_y2.max(1.0));
            assert!(r.x.windows(2).all(|w| w[0] < w[1]));
            for i in 0..4 {
                assert_eq!(r.l[(i, i)], c(0.0));
                for j in 0..4 {
                    assert!((r.l[(i, j)] + r.l[(j, i)].conj()).norm() < 1e-12);
                    // repulsion: −L_ij L_ji = |L_ij|²
                    let q = -(r.l[(i, j)] * r.l[(j, i)]);
                    assert!((q.re - r.l[(i, j)].norm_sqr()).abs() < 1e-12 && q.im.abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn commuting_start() {
    let class = SymmetryClass::orthogonal(3);
    let x = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![c(-1.0), c(0.5), c(2.0)]));
    let y = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![c(0.3), c(-0.2), c(0.1)]));
    let s = FreeState { class, x, y };
    let r = reduce(&s, DEFAULT_GAP).unwrap();
    assert_eq!(r.p, vec![0.3, -0.2, 0.1]);
    assert!(r.l.iter().all(|z| z.norm() == 0.0));
    let rep = cross_check(&s, 1.0, 1000, 10, FlowOptions::default(), 1e-6).unwrap();
    assert!(rep.max_discrepancy < 1e-12, "{}", rep.max_discrepancy);
}

#[test]
fn momentum_force_sums_to_zero() {
    for seed in 0..20 {
        let s = sample_free_state(SymmetryClass::unitary(4), seed, 0.1).unwrap();
        let d = reduced_rhs(&reduce(&s, DEFAULT_GAP).unwrap(), 0.0).unwrap();
        let total: f64 = d.dp.iter().sum();
        let scale = d.dp.iter().map(|v| v.abs()).fold(1.0, f64::max);
        assert!(total.abs() < 1e-12 * scale);
    }
}

#[test]
fn conservation_over_unit_time() {
    let s = sample_free_state(SymmetryClass::unitary(3), 7, 0.1).unwrap();
    let r = reduce(&s, DEFAULT_GAP).unwrap();
    let (_, drift) = integrate_reduced(&r, 1.0, 10_000, FlowOptions::default()).unwrap();
    assert!(drift.tr_l2 < 1e-9 && drift.hamiltonian < 1e-9 && drift.momentum < 1e-9);
}

#[test]
fn orthogonal_spin_stays_real() {
    let s = sample_free_state(SymmetryClass::orthogonal(4), 3, 0.1).unwrap();
    let r = reduce(&s, DEFAULT_GAP).unwrap();
    let (end, _) = integrate_reduced(&r, 1.0, 1000, FlowOptions::default()).unwrap();
    assert!(end.l.iter().all(|z| z.im == 0.0));
}

#[test]
fn cross_check_seeds() {
    for kind in [ClassKind::Orthogonal, ClassKind::Unitary] {
        for n in [3, 4] {
            for seed in [7, 11, 13] {
                let s = sample_free_state(SymmetryClass::new(kind, n).unwrap(), seed, 0.1).unwrap();
                let rep = cross_check(&s, 1.0, 10_000, 50, FlowOptions::default(), 1e-6).unwrap();
                assert!(rep.pass && rep.max_discrepancy < 1e-6, "{kind} N={n} seed {seed}");
                assert!(rep.drift.hamiltonian < 1e-9 && rep.drift.tr_l2 < 1e-9);
            }
        }
    }
}

#[test]
fn harmonic_variant() {
    let s = sample_free_state(SymmetryClass::orthogonal(3), 5, 0.1).unwrap();
    let opts = FlowOptions { omega: 0.8, ..FlowOptions::default() };
    let rep = cross_check(&s, 1.0, 10_000, 20, opts, 1e-6).unwrap();
    assert!(rep.max_discrepancy < 1e-6 && rep.drift.hamiltonian < 1e-9);
    let r = reduce(&s, DEFAULT_GAP).unwrap();
    let x2 = 0.5 * 0.64 * (&s.x * &s.x).trace().re;
    assert!((r.hamiltonian(0.8) - free_energy(&s, 0.8)).abs() < 1e-10 * x2.max(1.0));
}

#[test]
fn collision_aborts() {
    let class = SymmetryClass::orthogonal(2);
    let r = ReducedState { class, x: vec![0.0, 1.0], p: vec![1.0, -1.0], l: CMat::zeros(2, 2) };
    let err = integrate_reduced(&r, 1.0, 100, FlowOptions { collision_gap: 1e-3, ..FlowOptions::default() });
    assert!(matches!(err, Err(cmlab::Error::Collision { .. })));
}
