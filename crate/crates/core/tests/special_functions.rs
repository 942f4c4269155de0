mod common;

use coulomb_kit::special::{
    gamma_ratio, legendre_derivative_identity_residual, legendre_derivatives, legendre_sequence, log_gamma,
};
use coulomb_kit::Complex64;
use proptest::prelude::*;

use common::*;

#[test]
fn log_gamma_matches_high_precision_table() {
    for &(re, im, ref_re, ref_im) in LOG_GAMMA_TABLE {
        let got = log_gamma(Complex64::new(re, im)).unwrap();
        let reference = Complex64::new(ref_re, ref_im);
        let err = (got - reference).norm();
        // Relative, floored at 1 near the zeros of ln Γ (z = 1, 2).
        let bound = 1e-13 * reference.norm().max(1.0);
        assert!(
            err <= bound,
            "z = {re}{im:+}i: got {got}, want {reference}, err {err:e}"
        );
    }
}

#[test]
fn gamma_of_one_plus_i() {
    let g = log_gamma(Complex64::new(1.0, 1.0)).unwrap().exp();
    assert!((g.re - 0.498_015_668_1).abs() < 1e-10);
    assert!((g.im + 0.154_949_828_3).abs() < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn functional_equation(re in -50.0f64..50.0, im in -100.0f64..100.0) {
        let z = Complex64::new(re, im);
        prop_assume!(im.abs() > 1e-6 || (re - re.round()).abs() > 1e-6);
        let r = gamma_ratio(z + 1.0, z).unwrap();
        prop_assert!((r - z).norm() <= 1e-12 * z.norm(), "z = {z}: ratio {r}");
    }

    #[test]
    fn conjugate_symmetry(re in -50.0f64..50.0, im in 1e-9f64..100.0) {
        let z = Complex64::new(re, im);
        let up = log_gamma(z).unwrap();
        let down = log_gamma(z.conj()).unwrap();
        prop_assert!((up.conj() - down).norm() <= 1e-13 * up.norm().max(1.0));
    }

    #[test]
    fn legendre_bounded(x in -1.0f64..=1.0) {
        let p = legendre_sequence(x, 300).unwrap();
        prop_assert!(p.values().iter().all(|v| v.abs() <= 1.0 + 1e-14));
    }
}

#[test]
fn legendre_matches_rodrigues_oracle() {
    for l in 0..=18u32 {
        for i in 0..=20 {
            let x = -1.0 + 0.1 * i as f64;
            let p = legendre_sequence(x, l as usize).unwrap();
            let d = legendre_derivatives(x, l as usize).unwrap();
            let poly = rodrigues_scaled(l);
            let dpoly = derivative(&poly);
            let want = legendre_oracle(l, x);
            let dwant = legendre_derivative_oracle(l, x);
            let tol = 1e-14 + eval_error_bound(&poly, x) / scale(l);
            let dtol = 1e-14 * dwant.abs().max(1.0) + eval_error_bound(&dpoly, x) / scale(l);
            assert!((p.values()[l as usize] - want).abs() <= tol, "P_{l}({x})");
            assert!((d[l as usize] - dwant).abs() <= dtol, "P'_{l}({x})");
        }
    }
}

#[test]
fn derivative_identity_holds_symbolically() {
    for l in 0..=15 {
        assert!(derivative_identity_polynomial(l).iter().all(|&c| c == 0), "l = {l}");
    }
}

#[test]
fn derivative_identity_examples() {
    assert!(legendre_derivative_identity_residual(0.3, 0).unwrap() <= 1e-12);
    assert!(legendre_derivative_identity_residual(-0.9, 7).unwrap() <= 1e-11);
    assert!(legendre_derivative_identity_residual(1.0, 3).unwrap() <= 1e-11);
}

#[test]
fn recurrence_and_derivative_suites() {
    for i in 0..=100 {
        let x = -1.0 + 0.02 * i as f64;
        let x = x.clamp(-1.0, 1.0);
        let p = legendre_sequence(x, 201).unwrap();
        for l in 1..=200 {
            let r = p.recurrence_residual(l).unwrap();
            assert!(r <= 1e-13 * (1.0 + p.values()[l].abs()), "x = {x}, l = {l}: {r:e}");
        }
        for l in 0..=200 {
            let r = legendre_derivative_identity_residual(x, l).unwrap();
            assert!(r <= 1e-12 * (2 * l + 1) as f64, "x = {x}, l = {l}: {r:e}");
        }
    }
}
