use std::f64::consts::PI;

use cmlab::numerics::*;
use cmlab::Mat;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> Mat {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v: f64 = rng.random_range(-1.0..1.0);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    m
}

#[test]
fn quadrature_weights_and_order() {
    for n in [1, 2, 5, 17, 64, 300, 1024] {
        let rule = gauss_legendre(n).unwrap();
        let sum: f64 = rule.weights.iter().sum();
        assert!((sum - 2.0).abs() < 1e-13, "n={n}: Σw = {sum}");
        assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
        assert!(rule.weights.iter().all(|&w| w > 0.0));
    }
    let r2 = gauss_legendre(2).unwrap();
    assert!((r2.nodes[1] - 0.5773502691896258).abs() < 1e-15);
    assert!((r2.integrate(-1.0, 1.0, |x| x * x) - 2.0 / 3.0).abs() < 1e-15);
}

#[test]
fn quadrature_monomials_exact() {
    for n in [4, 8, 16] {
        let rule = gauss_legendre(n).unwrap();
        for k in 0..2 * n {
            let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            let got = rule.integrate(-1.0, 1.0, |x| x.powi(k as i32));
            assert!((got - exact).abs() < 1e-12, "n={n} k={k}");
        }
    }
}

#[test]
fn eigensolver_reconstruction_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..100 {
        let n = 1 + (case * 37) % 128;
        let m = random_symmetric(n, &mut rng);
        let e = sym_eig(&m, DEFAULT_EIG_TOL).unwrap();
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        let lam = Mat::from_diagonal(&nalgebra::DVector::from_vec(e.values.clone()));
        let rec = &e.vectors * lam * e.vectors.transpose();
        let norm = m.norm();
        assert!((rec - &m).norm() <= 1e-9 * norm, "case {case} n={n}");
        let vtv = e.vectors.transpose() * &e.vectors;
        assert!((vtv - Mat::identity(n, n)).amax() < 1e-10);
        for k in 0..n {
            let v = e.vectors.column(k);
            assert!((&m * v - v * e.values[k]).norm() <= 1e-10 * norm);
            // sign convention: largest-magnitude component positive
            let imax = v.iamax();
            assert!(v[imax] > 0.0);
        }
    }
}

#[test]
fn eigenvalues_match_nalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [3, 10, 40] {
        let m = random_symmetric(n, &mut rng);
        let ours = sym_eig(&m, DEFAULT_EIG_TOL).unwrap().values;
        let mut theirs: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
        theirs.sort_by(f64::total_cmp);
        for (a, b) in ours.iter().zip(&theirs) {
            assert!((a - b).abs() < 1e-11);
        }
    }
}

#[test]
fn hermitian_eigen_reconstructs() {
    use cmlab::CMat;
    use num_complex::Complex64;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let n = 6;
    let mut h = CMat::zeros(n, n);
    for i in 0..n {
        h[(i, i)] = Complex64::new(rng.random_range(-1.0..1.0), 0.0);
        for j in 0..i {
            let z = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    let e = hermitian_eig(&h, DEFAULT_EIG_TOL).unwrap();
    let lam = CMat::from_diagonal(&nalgebra::DVector::from_iterator(n, e.values.iter().map(|&v| Complex64::new(v, 0.0))));
    let rec = &e.vectors * lam * e.vectors.adjoint();
    assert!((rec - &h).camax() < 1e-11);
}

#[test]
fn rk4_oscillator_period() {
    let y = rk4(|_, y, dy| {
        dy[0] = y[1];
        dy[1] = -y[0];
    }, &[1.0, 0.0], 0.0, 2.0 * PI, 1000)
    .unwrap();
    assert!((y[0] - 1.0).abs() < 1e-9 && y[1].abs() < 1e-9);
}

#[test]
fn rk4_fourth_order() {
    let err = |steps| (rk4(|_, y, dy| dy[0] = y[0], &[1.0], 0.0, 1.0, steps).unwrap()[0] - 1f64.exp()).abs();
    let ratio = err(20) / err(40);
    assert!((14.0..18.0).contains(&ratio), "ratio {ratio}");
    assert_eq!(rk4(|_, _, dy| dy[0] = 0.0, &[3.5], 0.0, 2.0, 7).unwrap(), vec![3.5]);
}

#[test]
fn bessel_values() {
    assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
    assert!((bessel_j(0.5, PI / 2.0).unwrap() - 2.0 / PI).abs() < 1e-14);
    // ascending series for J_0(1)
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..30 {
        term *= -0.25 / (k * k) as f64;
        sum += term;
    }
    assert!((bessel_j(0.0, 1.0).unwrap() - sum).abs() < 1e-15);
    assert!(bessel_j(51.0, 1.0).is_err());
    assert!(bessel_j(1.0, 2e4).is_err());
    assert!(bessel_j(-1.0, 1.0).is_err());
}

#[test]
fn bessel_recurrence_grid() {
    for nu in [1.0, 2.5, 7.0, 20.0, 35.0] {
        for i in 1..=200 {
            let x = 0.37 * i as f64;
            let lhs = bessel_j(nu - 1.0, x).unwrap() + bessel_j(nu + 1.0, x).unwrap();
            let rhs = 2.0 * nu / x * bessel_j(nu, x).unwrap();
            assert!((lhs - rhs).abs() < 1e-9, "ν={nu} x={x}");
        }
    }
}

#[test]
fn bessel_known_values() {
    // frozen from an arbitrary-precision evaluation
    assert!((bessel_j(0.0, 20.0).unwrap() - 0.16702466434058322).abs() < 1e-10);
    assert!((bessel_j(1.0, 10.0).unwrap() - 0.0434727461688616).abs() < 1e-10);
    assert!((bessel_j(30.0, 25.0).unwrap() - 0.011809026124269).abs() < 1e-10);
    assert!((spherical_bessel_j(2, 3.0).unwrap() - ((3.0 / 27.0 - 1.0 / 3.0) * 3f64.sin() - 3.0 / 9.0 * 3f64.cos())).abs() < 1e-14);
    assert_eq!(spherical_bessel_j(0, 0.0).unwrap(), 1.0);
    assert_eq!(spherical_bessel_j(3, 0.0).unwrap(), 0.0);
}

#[test]
fn digamma_identities() {
    for x in [0.5, 1.0, 2.25] {
        assert!((digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x).abs() < 1e-13);
    }
    assert!((digamma(1.0).unwrap() + 0.5772156649015329).abs() < 1e-13);
    assert!((digamma(0.5).unwrap() - (digamma(1.0).unwrap() - 2.0 * 2f64.ln())).abs() < 1e-13);
    assert!(digamma(0.0).is_err() && digamma(-1.0).is_err());
}

proptest! {
    #[test]
    fn digamma_matches_statrs(x in 0.01f64..200.0) {
        let theirs = statrs::function::gamma::digamma(x);
        prop_assert!((digamma(x).unwrap() - theirs).abs() < 1e-10 * theirs.abs().max(1.0));
    }

    #[test]
    fn ln_gamma_matches_statrs(x in 0.01f64..150.0) {
        let theirs = statrs::function::gamma::ln_gamma(x);
        prop_assert!((ln_gamma(x) - theirs).abs() < 1e-10 * theirs.abs().max(1.0));
    }

    #[test]
    fn legendre_m_recurrence(l in 1usize..30, m in 0usize..5, x in -0.99f64..0.99) {
        prop_assume!(m <= l);
        let p = |l| legendre(l, m, x, LegendreKind::P).unwrap();
        let lhs = (l - m + 1) as f64 * p(l + 1);
        let rhs = (2 * l + 1) as f64 * x * p(l) - (l + m) as f64 * if l >= 1 + m { p(l - 1) } else { 0.0 };
        prop_assert!((lhs - rhs).abs() < 1e-10 * lhs.abs().max(1.0));
    }
}

#[test]
fn legendre_closed_forms() {
    assert_eq!(legendre(0, 0, 0.3, LegendreKind::P).unwrap(), 1.0);
    assert!((legendre(1, 1, 0.5, LegendreKind::P).unwrap() + 0.75f64.sqrt()).abs() < 1e-15);
    assert!((legendre(0, 0, 0.5, LegendreKind::Q).unwrap() - 0.5 * 3f64.ln()).abs() < 1e-15);
    assert!(legendre(2, 0, 1.0, LegendreKind::Q).is_err());
    assert!(legendre(1, 2, 0.1, LegendreKind::P).is_err());
    assert!((legendre(7, 0, 1.0, LegendreKind::P).unwrap() - 1.0).abs() < 1e-15);
}

#[test]
fn hermite_laguerre() {
    assert_eq!(hermite(0, 3.3).unwrap(), 1.0);
    assert_eq!(laguerre(0, 0.2, 3.3).unwrap(), 1.0);
    assert!((hermite(2, 1.5).unwrap() - 7.0).abs() < 1e-14);
    assert!((laguerre(1, 0.5, 2.0).unwrap() + 0.5).abs() < 1e-14);
    let x: f64 = 0.8;
    let h4 = 16.0 * x.powi(4) - 48.0 * x * x + 12.0;
    assert!((hermite(4, x).unwrap() - h4).abs() < 1e-12);
    assert!(hermite(201, 0.0).is_err());
}

#[test]
fn spherical_harmonics_orthonormal() {
    let rule = gauss_legendre(24).unwrap();
    let n_phi = 48;
    let inner = |l1, m1, l2, m2| {
        let mut s = num_complex::Complex64::new(0.0, 0.0);
        for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
            for q in 0..n_phi {
                let phi = 2.0 * PI * q as f64 / n_phi as f64;
                let a = spherical_harmonic(l1, m1, x.acos(), phi).unwrap();
                let b = spherical_harmonic(l2, m2, x.acos(), phi).unwrap();
                s += a.conj() * b * (w * 2.0 * PI / n_phi as f64);
            }
        }
        s
    };
    for (l, m) in [(0, 0), (1, -1), (1, 1), (3, 2), (6, -4)] {
        assert!((inner(l, m, l, m).re - 1.0).abs() < 1e-8);
    }
    assert!(inner(1, 0, 1, 1).norm() < 1e-10);
    assert!(inner(2, 1, 4, 1).norm() < 1e-10);
    let y00 = spherical_harmonic(0, 0, 0.4, 1.1).unwrap();
    assert!((y00.re - 1.0 / (4.0 * PI).sqrt()).abs() < 1e-15 && y00.im == 0.0);
    let theta: f64 = 0.7;
    let y10 = spherical_harmonic(1, 0, theta, 2.0).unwrap();
    assert!((y10.re - (3.0 / (4.0 * PI)).sqrt() * theta.cos()).abs() < 1e-15);
}
