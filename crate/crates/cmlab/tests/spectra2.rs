use std::f64::consts::PI;

use cmlab::numerics::{bessel_j, spherical_harmonic};
use cmlab::spectra2::*;
use num_complex::Complex64;

fn grid(n: usize, r_max: f64) -> Vec<f64> {
    (1..=n).map(|i| r_max * i as f64 / n as f64).collect()
}

#[test]
fn so2_matches_bessel_closed_form() {
    let ks = [
        PlaneWaveParams::orthogonal(1.3, -0.4, 0.8),
        PlaneWaveParams::orthogonal(0.2, 0.9, -1.7),
        PlaneWaveParams::orthogonal(2.0, 2.0, 0.5),
    ];
    let r = grid(200, 10.0);
    for k in &ks {
        for nu in -4..=6 {
            let vals = so2_project(k, nu as f64, &r, 256).unwrap();
            for (&ri, v) in r.iter().zip(&vals) {
                let want = so2_reference(k, nu, ri).unwrap();
                assert!((v - want).norm() <= 1e-8, "ν={nu} r={ri}");
            }
        }
    }
}

#[test]
fn so2_unit_kappa_example() {
    // κ = 1 from κ₁ = 1, K₁₂ = 0
    let k = PlaneWaveParams::orthogonal(1.0, -1.0, 0.0);
    assert!((k.kappa() - 1.0).abs() < 1e-15);
    let v = so2_project(&k, 1.0, &[1.0], 64).unwrap()[0];
    assert!((v.norm() - 2.0 * PI * bessel_j(1.0, 1.0).unwrap()).abs() < 1e-12);
    assert!(so2_project(&k, 1.0, &[1.0], 32).is_err());
}

#[test]
fn so2_radial_equation() {
    let k = PlaneWaveParams::orthogonal(1.1, -0.3, 0.6);
    let (_, e_rel) = energy_split(&k);
    let h = 1e-3;
    for nu in [0i64, 1, 3] {
        let u = |r: f64| so2_project(&k, nu as f64, &[r], 256).unwrap()[0] * r.sqrt();
        for r in [0.7, 1.9, 3.3, 6.1] {
            let d2 = (u(r + h) - 2.0 * u(r) + u(r - h)) / (h * h);
            let lhs = -d2 + u(r) * (so2_coupling(nu) / (r * r));
            let res = (lhs - u(r) * e_rel).norm();
            assert!(res < 1e-5 * (1.0 + u(r).norm()), "ν={nu} r={r}: {res}");
        }
    }
}

#[test]
fn su2_ratio_is_r_independent() {
    let ks = [PlaneWaveParams::unitary(1.3, -0.4, 0.8, 0.5), PlaneWaveParams::unitary(-0.2, 0.7, -1.1, 0.9)];
    let r = grid(40, 10.0);
    for k in &ks {
        for l in 0..=4usize {
            for m in -(l as i64)..=(l as i64) {
                let vals = su2_project(k, l, m, &r, 48).unwrap();
                let refs: Vec<f64> = r.iter().map(|&ri| su2_reference(k, l, m, ri).unwrap()).collect();
                let fmax = refs.iter().fold(0.0f64, |a, f| a.max(f.abs()));
                let ratios: Vec<Complex64> =
                    vals.iter().zip(&refs).filter(|(_, f)| f.abs() > 1e-3 * fmax).map(|(v, f)| v / *f).collect();
                let q0 = ratios[0];
                for q in &ratios {
                    assert!((q - q0).norm() <= 1e-6 * q0.norm(), "l={l} m={m}");
                }
            }
        }
    }
    let r = [0.5, 1.0, 2.0];
    let k = ks[0];
    let v = su2_project(&k, 1, 0, &r, 48).unwrap();
    let q: Vec<Complex64> = r.iter().zip(&v).map(|(&ri, vi)| vi / su2_reference(&k, 1, 0, ri).unwrap()).collect();
    assert!((q[1] - q[0]).norm() < 1e-6 * q[0].norm() && (q[2] - q[0]).norm() < 1e-6 * q[0].norm());
}

#[test]
fn su2_origin_and_phase() {
    let k = PlaneWaveParams::unitary(0.4, -0.4, 0.3, 0.2);
    let v = su2_project(&k, 0, 0, &[0.0], 24).unwrap()[0];
    let y00 = spherical_harmonic(0, 0, 0.0, 0.0).unwrap().re;
    assert!((v.re - 4.0 * PI * y00).abs() < 1e-12 && v.im.abs() < 1e-12);

    // rotating K₁₂ by δ multiplies the m-projection by e^{imδ}
    let delta = 0.7;
    let (kr, ki) = (0.3f64, 0.2f64);
    let (mag, ph) = (kr.hypot(ki), ki.atan2(kr));
    let k2 = PlaneWaveParams::unitary(0.4, -0.4, mag * (ph + delta).cos(), mag * (ph + delta).sin());
    for m in [-2i64, 1, 2] {
        let a = su2_project(&k, 2, m, &[1.7], 32).unwrap()[0];
        let b = su2_project(&k2, 2, m, &[1.7], 32).unwrap()[0];
        assert!((b - a * Complex64::from_polar(1.0, m as f64 * delta)).norm() < 1e-10 * a.norm());
    }
    assert!(su2_project(&k, 1, 2, &[1.0], 16).is_err());
}

#[test]
fn su2_profiles_are_half_integer_bessel() {
    let k = PlaneWaveParams::unitary(1.0, 0.2, 0.4, -0.6);
    let r = grid(30, 8.0);
    for l in 0..=3 {
        let vals = su2_project(&k, l, 0, &r, 40).unwrap();
        let j: Vec<f64> = r.iter().map(|&ri| bessel_j(l as f64 + 0.5, k.kappa() * ri).unwrap() / ri.sqrt()).collect();
        let q0 = vals[5] / j[5];
        for (v, jj) in vals.iter().zip(&j) {
            assert!((v - q0 * jj).norm() < 1e-8 * q0.norm(), "l={l}");
        }
    }
}

#[test]
fn su2_radial_equation() {
    let k = PlaneWaveParams::unitary(0.9, -0.5, 0.3, 0.8);
    let (_, e_rel) = energy_split(&k);
    let h = 1e-3;
    for l in [1usize, 2] {
        let u = |r: f64| su2_project(&k, l, 0, &[r], 32).unwrap()[0] * r;
        for r in [0.8, 2.5, 4.4] {
            let d2 = (u(r + h) - 2.0 * u(r) + u(r - h)) / (h * h);
            let res = (-d2 + u(r) * (su2_coupling(l) / (r * r)) - u(r) * e_rel).norm();
            assert!(res < 1e-5 * (1.0 + u(r).norm()), "l={l} r={r}: {res}");
        }
    }
}

#[test]
fn energy_split_identities() {
    let k = PlaneWaveParams::orthogonal(0.7, 0.7, 0.0);
    assert_eq!(energy_split(&k).1, 0.0);
    let k = PlaneWaveParams::unitary(0.4, -0.4, 0.3, -0.2);
    assert!(energy_split(&k).0.abs() < 1e-16);
    for (a, b, c, d) in [(1.3, -0.4, 0.8, 0.5), (0.1, 2.2, -0.3, 1.9), (-3.0, 1.0, 0.0, 0.2)] {
        let k = PlaneWaveParams::unitary(a, b, c, d);
        let (ecm, erel) = energy_split(&k);
        let kk = k.matrix();
        let half_tr_k2 = 0.5 * (&kk * &kk).trace().re;
        assert!((ecm + erel - half_tr_k2).abs() < 1e-13);
        assert!((erel - k.kappa().powi(2)).abs() < 1e-13);
    }
}

#[test]
fn phase_conventions() {
    let k = PlaneWaveParams::orthogonal(1.5, 0.5, 0.0);
    assert!((k.phi_k()).abs() < 1e-15);
    let k = PlaneWaveParams::orthogonal(1.0, -0.6, 0.9);
    assert!((k.phi_k().cos() - (k.k1 - k.k2) / (2.0 * k.kappa())).abs() < 1e-15);
    let k = PlaneWaveParams::unitary(0.0, 0.0, 0.6, 0.8);
    assert!((k.phi_k().cos() - 0.6).abs() < 1e-15);
}
