//! Regularized partial-wave sums.
//!
//! The series `g(x) = Σ (2l+1) S_l P_l(x)` and `G(x) = Σ S_l [P_{l+1} − P_{l−1}]`
//! do not converge term by term. Each is damped by `w_ε(l)` (default
//! `e^{−εl}`), summed to a fixed truncation for a decreasing schedule of `ε`,
//! and the resulting values are extrapolated to `ε = 0` with Neville's scheme.

mod extrapolate;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::coulomb::{
    aux_closed, check_angle, closed_amplitude, g_closed, s_matrix_ladder, AmplitudeMethod, AmplitudeResult,
    PhysicalParams,
};
use crate::special::{check_abscissa, LegendreSequence};
use crate::{Error, Result};

pub use extrapolate::neville_at_zero;

/// Largest damping weight at `l_max` for which a truncation counts as bounded.
pub const TAIL_WEIGHT: f64 = 1e-8;

/// Damping weight at `l_max` targeted by computed truncation orders. The
/// truncated tail otherwise dominates the extrapolated error.
pub const TRUNCATION_WEIGHT: f64 = 1e-16;

/// Angles below this are accepted but flagged as slowly converging.
pub const NEAR_FORWARD_ANGLE: f64 = PI / 36.0;

/// Damping applied to the `l`-th term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Damping {
    /// `e^{−εl}` (Abel).
    #[default]
    Exponential,
    /// `e^{−εl(l+1)}`.
    HeatKernel,
}

impl Damping {
    pub fn weight(self, epsilon: f64, l: usize) -> f64 {
        let l = l as f64;
        match self {
            Damping::Exponential => (-epsilon * l).exp(),
            Damping::HeatKernel => (-epsilon * l * (l + 1.0)).exp(),
        }
    }

    /// Smallest `l` with `weight(ε, l) ≤ TRUNCATION_WEIGHT`.
    pub fn truncation_for(self, epsilon: f64) -> usize {
        let target = -TRUNCATION_WEIGHT.ln() / epsilon;
        let l = match self {
            Damping::Exponential => target,
            Damping::HeatKernel => 0.5 * ((1.0 + 4.0 * target).sqrt() - 1.0),
        };
        l.ceil().max(1.0) as usize
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Damping::Exponential => "exponential",
            Damping::HeatKernel => "heat-kernel",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummationConfig {
    l_max: usize,
    epsilons: Vec<f64>,
    extrapolation_order: usize,
    damping: Damping,
    compare_with_closed_form: bool,
}

impl Default for SummationConfig {
    /// `ε = 0.1 · 2^{−j}`, `j = 0..=5`, fourth-order extrapolation.
    fn default() -> Self {
        Self::geometric(0.1, 0.5, 6, 4).expect("default schedule is valid")
    }
}

impl SummationConfig {
    pub fn new(l_max: usize, epsilons: Vec<f64>, extrapolation_order: usize) -> Result<Self> {
        let cfg = Self {
            l_max,
            epsilons,
            extrapolation_order,
            damping: Damping::Exponential,
            compare_with_closed_form: true,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// `levels` values `eps_max · ratio^j`, with `l_max` chosen so that the
    /// smallest `ε` is damped to [`TRUNCATION_WEIGHT`].
    pub fn geometric(eps_max: f64, ratio: f64, levels: usize, extrapolation_order: usize) -> Result<Self> {
        if !(ratio > 0.0 && ratio < 1.0) {
            return Err(Error::config(format!("epsilon ratio {ratio} must lie in (0, 1)")));
        }
        let epsilons: Vec<f64> = (0..levels).map(|j| eps_max * ratio.powi(j as i32)).collect();
        let l_max = epsilons.last().map_or(1, |&e| {
            if e > 0.0 && e.is_finite() {
                Damping::Exponential.truncation_for(e)
            } else {
                1
            }
        });
        Self::new(l_max, epsilons, extrapolation_order)
    }

    pub fn validate(&self) -> Result<()> {
        if self.l_max < 1 {
            return Err(Error::config("l_max must be at least 1"));
        }
        if self.epsilons.is_empty() {
            return Err(Error::config("epsilon schedule is empty"));
        }
        if let Some(bad) = self.epsilons.iter().find(|e| !(e.is_finite() && **e > 0.0)) {
            return Err(Error::config(format!("epsilon {bad} must be finite and > 0")));
        }
        if self.epsilons.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::config("epsilon schedule must be strictly decreasing"));
        }
        if self.extrapolation_order >= self.epsilons.len() {
            return Err(Error::config(format!(
                "extrapolation order {} needs more than {} epsilon values",
                self.extrapolation_order,
                self.epsilons.len()
            )));
        }
        Ok(())
    }

    pub fn with_l_max(mut self, l_max: usize) -> Result<Self> {
        self.l_max = l_max;
        self.validate()?;
        Ok(self)
    }

    /// Switches damping; the truncation order is recomputed from the
    /// smallest `ε` for the new weight.
    pub fn with_damping(mut self, damping: Damping) -> Self {
        self.damping = damping;
        if let Some(&e) = self.epsilons.last() {
            self.l_max = damping.truncation_for(e);
        }
        self
    }

    pub fn with_comparison(mut self, enabled: bool) -> Self {
        self.compare_with_closed_form = enabled;
        self
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    pub fn epsilons(&self) -> &[f64] {
        &self.epsilons
    }

    pub fn extrapolation_order(&self) -> usize {
        self.extrapolation_order
    }

    pub fn damping(&self) -> Damping {
        self.damping
    }

    pub fn compare_with_closed_form(&self) -> bool {
        self.compare_with_closed_form
    }

    /// Damping weight at `l_max` for the smallest `ε`.
    pub fn truncation_weight(&self) -> f64 {
        let e = *self.epsilons.last().expect("validated schedule is non-empty");
        self.damping.weight(e, self.l_max)
    }

    /// Whether `l_max` damps every scheduled `ε` to [`TAIL_WEIGHT`].
    pub fn is_tail_bounded(&self) -> bool {
        self.truncation_weight() <= TAIL_WEIGHT
    }
}

/// Per-`ε` values, the extrapolated limit and diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    epsilons: Vec<f64>,
    partial_values: Vec<Complex64>,
    extrapolated: Complex64,
    extrapolation_spread: f64,
    tail_estimate: f64,
    truncation_weight: f64,
    near_forward: bool,
    reference: Option<Complex64>,
    abs_error: Option<f64>,
}

impl ConvergenceReport {
    pub fn epsilons(&self) -> &[f64] {
        &self.epsilons
    }

    /// Damped sums, one per `ε`, in schedule order.
    pub fn partial_values(&self) -> &[Complex64] {
        &self.partial_values
    }

    pub fn extrapolated(&self) -> Complex64 {
        self.extrapolated
    }

    /// `|limit at the configured order − limit one order lower|`.
    pub fn extrapolation_spread(&self) -> f64 {
        self.extrapolation_spread
    }

    /// `|last retained term| / |sum|` at the smallest `ε`.
    pub fn tail_estimate(&self) -> f64 {
        self.tail_estimate
    }

    pub fn truncation_weight(&self) -> f64 {
        self.truncation_weight
    }

    /// Set when the abscissa corresponds to an angle below [`NEAR_FORWARD_ANGLE`].
    pub fn near_forward(&self) -> bool {
        self.near_forward
    }

    pub fn reference(&self) -> Option<Complex64> {
        self.reference
    }

    pub fn abs_error(&self) -> Option<f64> {
        self.abs_error
    }

    pub fn with_reference(mut self, reference: Complex64) -> Self {
        self.abs_error = Some((self.extrapolated - reference).norm());
        self.reference = Some(reference);
        self
    }

    /// Every value multiplied by `factor`.
    pub fn scaled(mut self, factor: Complex64) -> Self {
        let m = factor.norm();
        for v in &mut self.partial_values {
            *v *= factor;
        }
        self.extrapolated *= factor;
        self.extrapolation_spread *= m;
        if let Some(r) = self.reference {
            self.reference = Some(r * factor);
            self.abs_error = self.abs_error.map(|e| e * m);
        }
        self
    }
}

/// Which of the two partial-wave series to sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    /// `Σ c_l (2l+1) P_l(x)`
    Amplitude,
    /// `Σ c_l [P_{l+1}(x) − P_{l−1}(x)]`
    Auxiliary,
}

impl Series {
    fn legendre_degree(self, l_max: usize) -> usize {
        match self {
            Series::Amplitude => l_max,
            Series::Auxiliary => l_max + 1,
        }
    }

    fn basis(self, legendre: &[f64], l: usize) -> f64 {
        match self {
            Series::Amplitude => (2 * l + 1) as f64 * legendre[l],
            Series::Auxiliary => {
                let below = if l == 0 { 0.0 } else { legendre[l - 1] };
                legendre[l + 1] - below
            }
        }
    }
}

// (sum, last term) over l = 0..coefficients.len().
fn damped_sum(
    series: Series,
    legendre: &[f64],
    coefficients: &[Complex64],
    epsilon: f64,
    damping: Damping,
) -> (Complex64, Complex64) {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = Complex64::new(0.0, 0.0);
    for (l, c) in coefficients.iter().enumerate() {
        let term = c * (series.basis(legendre, l) * damping.weight(epsilon, l));
        sum += term;
        last = term;
    }
    (sum, last)
}

/// One damped sum over `l = 0..coefficients.len()`. `epsilon = 0` gives the
/// plain partial sum.
pub fn damped_partial_sum(
    series: Series,
    x: f64,
    coefficients: &[Complex64],
    epsilon: f64,
    damping: Damping,
) -> Result<Complex64> {
    check_abscissa(x)?;
    if !(epsilon.is_finite() && epsilon >= 0.0) {
        return Err(Error::config(format!("epsilon {epsilon} must be finite and >= 0")));
    }
    if coefficients.is_empty() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let legendre = LegendreSequence::new(x, series.legendre_degree(coefficients.len() - 1))?;
    Ok(damped_sum(series, legendre.values(), coefficients, epsilon, damping).0)
}

/// Runs the configured schedule for arbitrary coefficients `c_0..c_{l_max}`.
pub fn smoothed_series_with_coefficients(
    series: Series,
    x: f64,
    coefficients: &[Complex64],
    cfg: &SummationConfig,
) -> Result<ConvergenceReport> {
    cfg.validate()?;
    check_series_abscissa(x)?;
    if coefficients.len() != cfg.l_max + 1 {
        return Err(Error::config(format!(
            "expected {} coefficients, got {}",
            cfg.l_max + 1,
            coefficients.len()
        )));
    }
    let legendre = LegendreSequence::new(x, series.legendre_degree(cfg.l_max))?;

    let mut partial_values = Vec::with_capacity(cfg.epsilons.len());
    let mut tail_estimate = 0.0;
    for &eps in &cfg.epsilons {
        let (sum, last) = damped_sum(series, legendre.values(), coefficients, eps, cfg.damping);
        partial_values.push(sum);
        tail_estimate = if sum.norm() > 0.0 {
            last.norm() / sum.norm()
        } else {
            last.norm()
        };
    }

    let n = cfg.extrapolation_order + 1;
    let start = cfg.epsilons.len() - n;
    let extrapolated = neville_at_zero(&cfg.epsilons[start..], &partial_values[start..])?;
    let lower = if n > 1 {
        neville_at_zero(&cfg.epsilons[start + 1..], &partial_values[start + 1..])?
    } else if partial_values.len() > 1 {
        partial_values[partial_values.len() - 2]
    } else {
        extrapolated
    };

    Ok(ConvergenceReport {
        epsilons: cfg.epsilons.clone(),
        partial_values,
        extrapolated,
        extrapolation_spread: (extrapolated - lower).norm(),
        tail_estimate,
        truncation_weight: cfg.truncation_weight(),
        near_forward: x > NEAR_FORWARD_ANGLE.cos(),
        reference: None,
        abs_error: None,
    })
}

fn check_series_abscissa(x: f64) -> Result<()> {
    if !x.is_finite() || x < -1.0 {
        return Err(Error::domain(format!("x = {x} outside [-1, 1)")));
    }
    if x >= 1.0 {
        return Err(Error::domain(format!("x = {x}: the series is singular at x = 1")));
    }
    Ok(())
}

/// Regularized `g(x) = Σ (2l+1) S_l P_l(x)`.
pub fn smoothed_g_series(x: f64, p: &PhysicalParams, cfg: &SummationConfig) -> Result<ConvergenceReport> {
    check_series_abscissa(x)?;
    cfg.validate()?;
    let ladder = s_matrix_ladder(p, cfg.l_max)?;
    let report = smoothed_series_with_coefficients(Series::Amplitude, x, ladder.values(), cfg)?;
    if cfg.compare_with_closed_form {
        Ok(report.with_reference(g_closed(x, p)?))
    } else {
        Ok(report)
    }
}

/// Regularized auxiliary function `G(x) = Σ S_l [P_{l+1}(x) − P_{l−1}(x)]`.
pub fn smoothed_aux_series(x: f64, p: &PhysicalParams, cfg: &SummationConfig) -> Result<ConvergenceReport> {
    check_series_abscissa(x)?;
    cfg.validate()?;
    let ladder = s_matrix_ladder(p, cfg.l_max)?;
    let report = smoothed_series_with_coefficients(Series::Auxiliary, x, ladder.values(), cfg)?;
    if cfg.compare_with_closed_form {
        Ok(report.with_reference(aux_closed(x, p)?))
    } else {
        Ok(report)
    }
}

/// Series amplitude with its report, in units of `f`.
pub fn series_amplitude_report(
    theta: f64,
    p: &PhysicalParams,
    cfg: &SummationConfig,
) -> Result<(AmplitudeResult, ConvergenceReport)> {
    check_angle(theta)?;
    let x = theta.cos();
    let mut report =
        smoothed_g_series(x, p, &cfg.clone().with_comparison(false))?.scaled(Complex64::new(0.0, 2.0 * p.k()).inv());
    if cfg.compare_with_closed_form {
        report = report.with_reference(closed_amplitude(theta, p)?.f);
    }
    let error_estimate = report.abs_error().unwrap_or(report.extrapolation_spread());
    let result = AmplitudeResult {
        theta,
        f: report.extrapolated(),
        method: AmplitudeMethod::RegularizedSeries,
        error_estimate,
    };
    Ok((result, report))
}

/// `f(θ)` from the regularized series `g(cos θ) / (2ik)`.
pub fn series_amplitude(theta: f64, p: &PhysicalParams, cfg: &SummationConfig) -> Result<AmplitudeResult> {
    series_amplitude_report(theta, p, cfg).map(|(r, _)| r)
}

/// `Σ_{l≤L} (2l+1) e^{−εl} P_l(x)` at each abscissa.
pub fn delta_kernel_demo(x_grid: &[f64], epsilon: f64, degree: usize) -> Result<Vec<f64>> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::config(format!("epsilon {epsilon} must be finite and > 0")));
    }
    let ones = vec![Complex64::new(1.0, 0.0); degree + 1];
    x_grid
        .iter()
        .map(|&x| {
            check_abscissa(x)?;
            damped_partial_sum(Series::Amplitude, x, &ones, epsilon, Damping::Exponential).map(|v| v.re)
        })
        .collect()
}

/// Raw partial sums `Σ_{l≤n} (2l+1) S_l P_l(cos θ) / (2ik)` for `n = 0..=L`.
pub fn unregularized_partial_sums(theta: f64, p: &PhysicalParams, degree: usize) -> Result<Vec<Complex64>> {
    check_angle(theta)?;
    let ladder = s_matrix_ladder(p, degree)?;
    let legendre = LegendreSequence::new(theta.cos(), degree)?;
    let scale = Complex64::new(0.0, 2.0 * p.k()).inv();
    let mut sum = Complex64::new(0.0, 0.0);
    Ok(ladder
        .values()
        .iter()
        .enumerate()
        .map(|(l, s)| {
            sum += s * Series::Amplitude.basis(legendre.values(), l);
            sum * scale
        })
        .collect())
}
