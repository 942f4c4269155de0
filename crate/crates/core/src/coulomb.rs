//! Coulomb-field parameters, partial-wave S-matrix and the closed-form
//! amplitude.
//!
//! Conventions: `β = μκ/(ħ²k) = κ/(ħv)`, positive for an attractive field.
//! `S_l = Γ(l+1−iβ)/Γ(l+1+iβ) = exp(2iδ_l)`. The auxiliary function
//! `G(x) = Σ S_l [P_{l+1}(x) − P_{l−1}(x)]` has the closed form
//! `G(x) = S_0 − 2 S_0 exp[iβ ln((1−x)/2)]` for `x < 1`, and `g = G'`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::special::{gamma_ratio, log_gamma, wrap_pi};
use crate::{Error, Result};

/// Angles at or below this are treated as the forward direction and rejected.
pub const FORWARD_EXCLUSION: f64 = 1e-9;

/// Ladder values are compared against the direct Gamma ratio this often.
pub const LADDER_CHECK_INTERVAL: usize = 64;

/// Largest accepted `|S_l(ladder) − S_l(direct)|` at a checkpoint.
pub const LADDER_DRIFT_TOLERANCE: f64 = 1e-10;

/// Wavenumber and Coulomb strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    k: f64,
    beta: f64,
}

impl PhysicalParams {
    pub fn new(k: f64, beta: f64) -> Result<Self> {
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::domain(format!("wavenumber k = {k} must be finite and > 0")));
        }
        if !beta.is_finite() {
            return Err(Error::domain(format!("Coulomb strength beta = {beta} must be finite")));
        }
        Ok(Self { k, beta })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Same wavenumber, opposite sign of the interaction.
    pub fn reversed(&self) -> Self {
        Self {
            k: self.k,
            beta: -self.beta,
        }
    }
}

/// Derives `(k, β)` from reduced mass, coupling `κ` (potential `−κ/r`),
/// energy and `ħ`.
pub fn params_from_physical(mu: f64, kappa: f64, energy: f64, hbar: f64) -> Result<PhysicalParams> {
    check_positive("reduced mass", mu)?;
    check_positive("energy", energy)?;
    check_positive("hbar", hbar)?;
    if !kappa.is_finite() {
        return Err(Error::domain(format!("coupling kappa = {kappa} must be finite")));
    }
    let k = (2.0 * mu * energy).sqrt() / hbar;
    let v = incident_velocity(mu, energy)?;
    PhysicalParams::new(k, kappa / (hbar * v))
}

/// `v = √(2E/μ)`.
pub fn incident_velocity(mu: f64, energy: f64) -> Result<f64> {
    check_positive("reduced mass", mu)?;
    check_positive("energy", energy)?;
    Ok((2.0 * energy / mu).sqrt())
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} = {v} must be finite and > 0")))
    }
}

/// One partial wave: `S_l` and its phase shift `δ_l ∈ (−π, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialWave {
    pub l: usize,
    pub s: Complex64,
    pub delta: f64,
}

/// `S_l` from the Gamma ratio, with `δ_l = arg Γ(l+1−iβ)` reduced to `(−π, π]`.
pub fn s_matrix(l: usize, p: &PhysicalParams) -> Result<PartialWave> {
    if p.beta == 0.0 {
        return Ok(PartialWave {
            l,
            s: Complex64::new(1.0, 0.0),
            delta: 0.0,
        });
    }
    let a = Complex64::new(l as f64 + 1.0, -p.beta);
    let s = gamma_ratio(a, a.conj())?;
    let delta = wrap_pi(log_gamma(a)?.im);
    Ok(PartialWave { l, s, delta })
}

/// `S_0, …, S_L` generated by `S_{l+1} = S_l (l+1−iβ)/(l+1+iβ)` from one Gamma
/// evaluation, cross-checked against the direct ratio at fixed intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct SMatrixLadder {
    values: Vec<Complex64>,
    max_drift: f64,
    checkpoints: Vec<usize>,
}

impl SMatrixLadder {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn max_drift(&self) -> f64 {
        self.max_drift
    }

    /// Indices at which the ladder was compared with the direct ratio.
    pub fn checkpoints(&self) -> &[usize] {
        &self.checkpoints
    }
}

pub fn s_matrix_ladder(p: &PhysicalParams, l_max: usize) -> Result<SMatrixLadder> {
    if p.beta == 0.0 {
        return Ok(SMatrixLadder {
            values: vec![Complex64::new(1.0, 0.0); l_max + 1],
            max_drift: 0.0,
            checkpoints: Vec::new(),
        });
    }
    let mut values = Vec::with_capacity(l_max + 1);
    values.push(s_matrix(0, p)?.s);
    let mut max_drift: f64 = 0.0;
    let mut checkpoints = Vec::new();
    for l in 0..l_max {
        let n = l as f64 + 1.0;
        let next = values[l] * Complex64::new(n, -p.beta) / Complex64::new(n, p.beta);
        values.push(next);
        let idx = l + 1;
        if idx % LADDER_CHECK_INTERVAL == 0 || idx == l_max {
            let drift = (next - s_matrix(idx, p)?.s).norm();
            checkpoints.push(idx);
            max_drift = max_drift.max(drift);
            if drift > LADDER_DRIFT_TOLERANCE {
                return Err(Error::LadderDrift {
                    l: idx,
                    drift,
                    tolerance: LADDER_DRIFT_TOLERANCE,
                });
            }
        }
    }
    Ok(SMatrixLadder {
        values,
        max_drift,
        checkpoints,
    })
}

/// Relative residual of `(l+1−iβ) S_l = (l+1+iβ) S_{l+1}` using direct `S_l`.
pub fn upward_ladder_residual(l: usize, p: &PhysicalParams) -> Result<f64> {
    let n = l as f64 + 1.0;
    let lhs = Complex64::new(n, -p.beta) * s_matrix(l, p)?.s;
    let rhs = Complex64::new(n, p.beta) * s_matrix(l + 1, p)?.s;
    Ok((lhs - rhs).norm() / lhs.norm())
}

/// Relative residual of `(l+iβ) S_l = (l−iβ) S_{l−1}` for `l ≥ 1`.
pub fn downward_ladder_residual(l: usize, p: &PhysicalParams) -> Result<f64> {
    if l == 0 {
        return Err(Error::domain("downward ladder needs l >= 1"));
    }
    let n = l as f64;
    let lhs = Complex64::new(n, p.beta) * s_matrix(l, p)?.s;
    let rhs = Complex64::new(n, -p.beta) * s_matrix(l - 1, p)?.s;
    Ok((lhs - rhs).norm() / lhs.norm())
}

fn check_x_below_one(x: f64) -> Result<()> {
    if !x.is_finite() || x < -1.0 {
        return Err(Error::domain(format!("x = {x} outside [-1, 1)")));
    }
    if x >= 1.0 {
        return Err(Error::domain(format!(
            "x = {x}: the auxiliary function has a branch point at x = 1"
        )));
    }
    Ok(())
}

// exp[iβ ln((1-x)/2)], unit modulus.
fn log_phase(x: f64, beta: f64) -> Complex64 {
    Complex64::from_polar(1.0, beta * ((1.0 - x) / 2.0).ln())
}

/// Closed form of the auxiliary function `G(x)`.
pub fn aux_closed(x: f64, p: &PhysicalParams) -> Result<Complex64> {
    check_x_below_one(x)?;
    if p.beta == 0.0 {
        return Ok(Complex64::new(-1.0, 0.0));
    }
    let s0 = s_matrix(0, p)?.s;
    Ok(-2.0 * s0 * log_phase(x, p.beta) + s0)
}

/// Closed form of `g(x) = G'(x) = 2iβ S_0 exp[iβ ln((1−x)/2)] / (1−x)`.
pub fn g_closed(x: f64, p: &PhysicalParams) -> Result<Complex64> {
    check_x_below_one(x)?;
    if p.beta == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let s0 = s_matrix(0, p)?.s;
    Ok(Complex64::new(0.0, 2.0 * p.beta) * s0 * log_phase(x, p.beta) / (1.0 - x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmplitudeMethod {
    ClosedForm,
    RegularizedSeries,
}

impl AmplitudeMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            AmplitudeMethod::ClosedForm => "closed_form",
            AmplitudeMethod::RegularizedSeries => "regularized_series",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeResult {
    pub theta: f64,
    pub f: Complex64,
    pub method: AmplitudeMethod,
    /// Absolute, in the units of `|f|`; zero for the closed form.
    pub error_estimate: f64,
}

pub(crate) fn check_angle(theta: f64) -> Result<()> {
    if !theta.is_finite() || theta > PI {
        return Err(Error::domain(format!("scattering angle {theta} outside (0, pi]")));
    }
    if theta <= FORWARD_EXCLUSION {
        return Err(Error::domain(format!(
            "scattering angle {theta} is in the forward direction; the amplitude is singular at 0"
        )));
    }
    Ok(())
}

/// `f(θ) = Γ(1−iβ)/(iΓ(iβ)) · exp[iβ ln sin²(θ/2)] / (2k sin²(θ/2))`.
pub fn closed_amplitude(theta: f64, p: &PhysicalParams) -> Result<AmplitudeResult> {
    check_angle(theta)?;
    let f = if p.beta == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        let half = (0.5 * theta).sin();
        let sin2 = half * half;
        let prefactor = gamma_ratio(Complex64::new(1.0, -p.beta), Complex64::new(0.0, p.beta))? / Complex64::i();
        let phase = Complex64::from_polar(1.0, p.beta * 2.0 * half.ln());
        prefactor * phase / (2.0 * p.k * sin2)
    };
    Ok(AmplitudeResult {
        theta,
        f,
        method: AmplitudeMethod::ClosedForm,
        error_estimate: 0.0,
    })
}

/// `|f(θ)|²` from the closed form.
pub fn differential_cross_section(theta: f64, p: &PhysicalParams) -> Result<f64> {
    Ok(closed_amplitude(theta, p)?.f.norm_sqr())
}

/// `β² / (4k² sin⁴(θ/2))`.
pub fn rutherford_cross_section(theta: f64, p: &PhysicalParams) -> Result<f64> {
    check_angle(theta)?;
    let s2 = (0.5 * theta).sin().powi(2);
    Ok(p.beta * p.beta / (4.0 * p.k * p.k * s2 * s2))
}

/// `|(1−x) G'_h(x) + iβ G(x) − iβ S_0|` with `G'_h` the central difference of
/// the closed `G` at step `h`.
pub fn ode_residual(x: f64, p: &PhysicalParams, h: f64) -> Result<f64> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::domain(format!("step h = {h} must be finite and > 0")));
    }
    if !x.is_finite() || x - h <= -1.0 || x + h >= 1.0 {
        return Err(Error::domain(format!("stencil x = {x} ± {h} leaves (-1, 1)")));
    }
    let derivative = (aux_closed(x + h, p)? - aux_closed(x - h, p)?) / (2.0 * h);
    let ib = Complex64::new(0.0, p.beta);
    let s0 = s_matrix(0, p)?.s;
    Ok(((1.0 - x) * derivative + ib * aux_closed(x, p)? - ib * s0).norm())
}
