use std::f64::consts::PI;

use coulomb_kit::coulomb::{aux_closed, closed_amplitude, g_closed, s_matrix, PhysicalParams};
use coulomb_kit::special::{gauss_legendre, legendre_sequence};
use coulomb_kit::summation::*;
use coulomb_kit::Complex64;

fn params(k: f64, beta: f64) -> PhysicalParams {
    PhysicalParams::new(k, beta).unwrap()
}

fn schedule_4000(order: usize) -> SummationConfig {
    let eps: Vec<f64> = (0..6).map(|j| 0.1 / 2f64.powi(j)).collect();
    SummationConfig::new(4000, eps, order).unwrap()
}

#[test]
fn g_series_at_right_angle() {
    let p = params(1.0, 1.0);
    let reference = g_closed(0.0, &p).unwrap();
    let report = smoothed_g_series(0.0, &p, &schedule_4000(4)).unwrap();
    assert_eq!(report.reference(), Some(reference));
    assert!(report.abs_error().unwrap() <= 1e-3 * reference.norm());

    let crude = SummationConfig::new(4000, vec![0.1], 0).unwrap();
    let crude_report = smoothed_g_series(0.0, &p, &crude).unwrap();
    assert!(crude_report.abs_error().unwrap() > report.abs_error().unwrap());
}

#[test]
fn aux_series_examples() {
    let p = params(1.0, 1.0);
    let s0 = s_matrix(0, &p).unwrap().s;
    let report = smoothed_aux_series(-1.0, &p, &SummationConfig::default()).unwrap();
    assert!(report.partial_values().iter().all(|v| *v == -s0));
    assert_eq!(report.extrapolated(), -s0);

    let report = smoothed_aux_series(0.0, &p, &SummationConfig::default()).unwrap();
    let closed = aux_closed(0.0, &p).unwrap();
    assert!((report.extrapolated() - closed).norm() <= 1e-3);
}

#[test]
fn series_amplitude_examples() {
    let p = params(1.0, 1.0);
    let closed = closed_amplitude(PI / 2.0, &p).unwrap().f;
    let f = series_amplitude(PI / 2.0, &p, &schedule_4000(4)).unwrap();
    assert!((f.f - closed).norm() <= 1e-3 * closed.norm());
    assert!(f.error_estimate > 0.0 && f.error_estimate <= 1e-3 * closed.norm());

    let zero = series_amplitude(PI / 2.0, &params(1.0, 0.0), &SummationConfig::default()).unwrap();
    assert!(zero.f.norm() < 1e-8);
}

#[test]
fn smaller_angle_error_decreases_along_schedule() {
    let p = params(1.0, 1.0);
    let (result, report) = series_amplitude_report(PI / 6.0, &p, &SummationConfig::default()).unwrap();
    let reference = report.reference().unwrap();
    let errors: Vec<f64> = report.partial_values().iter().map(|v| (v - reference).norm()).collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    assert!(result.error_estimate <= 1e-3 * reference.norm());
    assert!(!report.near_forward());
}

#[test]
fn error_estimate_without_comparison() {
    let p = params(1.0, 1.0);
    let cfg = SummationConfig::default().with_comparison(false);
    let (result, report) = series_amplitude_report(PI / 3.0, &p, &cfg).unwrap();
    assert!(report.reference().is_none());
    assert_eq!(result.error_estimate, report.extrapolation_spread());
    let closed = closed_amplitude(PI / 3.0, &p).unwrap().f;
    assert!(result.error_estimate < 1e-2 * closed.norm());
}

#[test]
fn tightening_schedule_does_not_hurt() {
    let default = SummationConfig::default();
    let tighter = SummationConfig::geometric(0.1, 0.5, 7, 4).unwrap();
    for (k, beta) in [(1.0, 1.0), (1.0, -1.0), (2.0, 0.5)] {
        let p = params(k, beta);
        for theta in [PI / 6.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0, PI] {
            let e0 = series_amplitude(theta, &p, &default).unwrap().error_estimate;
            let e1 = series_amplitude(theta, &p, &tighter).unwrap().error_estimate;
            assert!(e1 <= e0 + 1e-10, "k {k} beta {beta} theta {theta}: {e0:e} -> {e1:e}");
        }
    }
}

#[test]
fn unit_coefficients_reproduce_kernel() {
    let cfg = SummationConfig::new(300, vec![0.2, 0.1, 0.05], 2).unwrap();
    let ones = vec![Complex64::new(1.0, 0.0); cfg.l_max() + 1];
    for x in [-1.0, -0.3, 0.0, 0.71, 0.999] {
        let report = smoothed_series_with_coefficients(Series::Amplitude, x, &ones, &cfg).unwrap();
        for (eps, v) in cfg.epsilons().iter().zip(report.partial_values()) {
            let kernel = delta_kernel_demo(&[x], *eps, cfg.l_max()).unwrap()[0];
            assert_eq!(v.re.to_bits(), kernel.to_bits());
            assert_eq!(v.im, 0.0);
        }
    }
}

#[test]
fn aux_difference_quotient_matches_g() {
    let p = params(1.0, 1.5);
    let cfg = SummationConfig::new(200, vec![0.1], 0).unwrap().with_comparison(false);
    for x in [-0.6, 0.1, 0.5] {
        let g = smoothed_g_series(x, &p, &cfg).unwrap().partial_values()[0];
        let err = |h: f64| {
            let up = smoothed_aux_series(x + h, &p, &cfg).unwrap().partial_values()[0];
            let down = smoothed_aux_series(x - h, &p, &cfg).unwrap().partial_values()[0];
            ((up - down) / (2.0 * h) - g).norm()
        };
        let (e1, e2) = (err(1e-3), err(5e-4));
        assert!((e1 / e2 - 4.0).abs() < 0.2, "x {x}: {e1:e} {e2:e}");
    }
}

#[test]
fn telescoping_free_aux_sum() {
    for x in [-0.8, -0.25, 0.0, 0.4, 0.9] {
        for l_max in [0usize, 1, 7, 50, 200] {
            let ones = vec![Complex64::new(1.0, 0.0); l_max + 1];
            let sum = damped_partial_sum(Series::Auxiliary, x, &ones, 0.0, Damping::Exponential).unwrap();
            let p = legendre_sequence(x, l_max + 1).unwrap();
            let expected = p.values()[l_max] + p.values()[l_max + 1] - 1.0;
            assert!((sum.re - expected).abs() <= 1e-12 && sum.im == 0.0, "x {x} L {l_max}");
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let p = params(2.0, 0.5);
    let cfg = SummationConfig::default();
    let a = smoothed_g_series(0.3, &p, &cfg).unwrap();
    let b = smoothed_g_series(0.3, &p, &cfg).unwrap();
    assert_eq!(a, b);
}

#[test]
fn kernel_examples() {
    let (nodes, weights) = gauss_legendre(256).unwrap();
    for (eps, l) in [(0.1, 200), (0.05, 400)] {
        let k = delta_kernel_demo(&nodes, eps, l).unwrap();
        let integral: f64 = k.iter().zip(&weights).map(|(v, w)| v * w).sum();
        assert!((integral - 2.0).abs() <= 1e-6, "eps {eps}: {integral}");
    }
    let at_minus_one = delta_kernel_demo(&[-1.0], 0.1, 1000).unwrap()[0];
    // (1 - r^2) / (1 + r)^3 with r = e^{-0.1}
    let r = (-0.1f64).exp();
    assert!((at_minus_one - (1.0 - r * r) / (1.0 + r).powi(3)).abs() < 1e-12);
    let peak = |eps| delta_kernel_demo(&[1.0], eps, 2000).unwrap()[0];
    assert!(peak(0.05) > peak(0.1));
}

#[test]
fn raw_partial_sums() {
    let free = unregularized_partial_sums(PI / 2.0, &params(1.0, 0.0), 200).unwrap();
    let steps: Vec<f64> = free.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
    // even terms (2l+1) P_l(0) / 2 do not decay
    assert!(steps[steps.len() - 2..].iter().any(|&s| s > 1.0));

    let p = params(1.0, 1.0);
    let sums = unregularized_partial_sums(PI / 2.0, &p, 200).unwrap();
    let tail = &sums[sums.len() - 50..];
    let mean = tail.iter().sum::<Complex64>() / tail.len() as f64;
    let sd = (tail.iter().map(|v| (v - mean).norm_sqr()).sum::<f64>() / tail.len() as f64).sqrt();
    let mean_mag = tail.iter().map(|v| v.norm()).sum::<f64>() / tail.len() as f64;
    assert!(sd > 0.1 * mean_mag);
}
