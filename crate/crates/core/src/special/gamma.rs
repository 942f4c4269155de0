//! Complex log-Gamma on the principal branch.
//!
//! Strategy:
//! - `Im z < 0` is mapped to the upper half-plane by conjugation, so that
//!   `ln Γ(z̄) = conj(ln Γ(z))` holds bit for bit.
//! - `Re z < 1/2` goes through the reflection formula with the branch
//!   correction that keeps the imaginary part continuous off the negative
//!   real axis.
//! - Otherwise the argument is shifted up by `Γ(z+1) = zΓ(z)` until
//!   `|z| ≥ 12` and the Stirling series is summed through `B_16`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

/// Largest `|z|` accepted by [`log_gamma`].
pub const MAX_ARGUMENT: f64 = 1.0e7;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;
const LN_2: f64 = std::f64::consts::LN_2;

/// Below this modulus the argument is shifted before using Stirling.
const STIRLING_MIN_ABS: f64 = 12.0;

/// Above this imaginary part `ln sin(πz)` is taken from its exponential form.
const LN_SIN_ASYMPTOTIC_IM: f64 = 5.0;

/// Largest real part that `exp` maps to a finite value.
const MAX_EXP_ARG: f64 = 709.78;

// B_{2n} / (2n (2n - 1)) for n = 1..=8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// Principal branch of `ln Γ(z)`.
///
/// The branch is the analytic continuation that is real on the positive real
/// axis, with a cut along the negative real axis; on the cut the value is the
/// limit from above.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain(format!("log_gamma of non-finite argument {z}")));
    }
    if z.norm() > MAX_ARGUMENT {
        return Err(Error::Overflow(format!(
            "log_gamma argument |z| = {:e} exceeds {MAX_ARGUMENT:e}",
            z.norm()
        )));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor() {
        return Err(Error::Pole(z.re));
    }
    if z.im < 0.0 {
        Ok(log_gamma_upper(z.conj()).conj())
    } else {
        Ok(log_gamma_upper(z))
    }
}

/// `Γ(a) / Γ(b)` evaluated as `exp(ln Γ(a) − ln Γ(b))`.
pub fn gamma_ratio(a: Complex64, b: Complex64) -> Result<Complex64> {
    let diff = log_gamma(a)? - log_gamma(b)?;
    if diff.re > MAX_EXP_ARG {
        return Err(Error::Overflow(format!("Γ({a})/Γ({b}) has modulus e^{:.3}", diff.re)));
    }
    Ok(diff.exp())
}

// Requires Im z >= 0 (or -0.0) and z away from the poles.
fn log_gamma_upper(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let branch = 2.0 * PI * (0.5 * z.re + 0.25).floor();
        let one_minus = Complex64::new(1.0 - z.re, -z.im);
        // Re(1 - z) > 1/2, and conj(1 - z) lies in the upper half-plane.
        let reflected = log_gamma_upper(one_minus.conj()).conj();
        return Complex64::new(LN_PI, branch) - ln_sin_pi(z) - reflected;
    }

    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < STIRLING_MIN_ABS {
        shift += w.ln();
        w += 1.0;
    }
    stirling(w) - shift
}

fn stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let tail = STIRLING
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * inv2 + c);
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + tail * inv
}

/// Principal `ln sin(πz)` for `Im z ≥ 0`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let r = z.re - 2.0 * (0.5 * z.re).round();
    if z.im > LN_SIN_ASYMPTOTIC_IM {
        // sin(πz) = (i/2) e^{-iπz} (1 - e^{2iπz})
        let decay = (-2.0 * PI * z.im).exp();
        let (s2, c2) = sin_cos_pi(2.0 * r - 2.0 * (r).round());
        let w = Complex64::new(decay * c2, decay * s2);
        let log1m = if w.norm() < 1e-8 {
            -w
        } else {
            (Complex64::new(1.0, 0.0) - w).ln()
        };
        let re = PI * z.im - LN_2 + log1m.re;
        let im = wrap_pi(-PI * r + 0.5 * PI + log1m.im);
        return Complex64::new(re, im);
    }
    let (s, c) = sin_cos_pi(r);
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh()).ln()
}

/// `(sin πr, cos πr)` for `r ∈ [−1, 1]`, reduced to `[−1/2, 1/2]` first.
fn sin_cos_pi(r: f64) -> (f64, f64) {
    if r > 0.5 {
        let t = 1.0 - r;
        ((PI * t).sin(), -(PI * t).cos())
    } else if r < -0.5 {
        let t = 1.0 + r;
        (-(PI * t).sin(), -(PI * t).cos())
    } else {
        ((PI * r).sin(), (PI * r).cos())
    }
}

/// Maps an angle into `(−π, π]`.
pub(crate) fn wrap_pi(angle: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut a = angle - two_pi * (angle / two_pi).round();
    if a <= -PI {
        a += two_pi;
    } else if a > PI {
        a -= two_pi;
    }
    a
}
