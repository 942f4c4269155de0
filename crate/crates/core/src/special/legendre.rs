//! Legendre polynomials by upward recurrence.
//!
//! `P_0 = 1`, `P_1 = x`, `(l+1) P_{l+1} = (2l+1) x P_l − l P_{l−1}`, which is
//! stable on `[−1, 1]`. Derivatives use `P'_{l+1} = x P'_l + (l+1) P_l`, which
//! stays finite at the endpoints.

use std::f64::consts::PI;

use crate::{Error, Result};

/// `P_0(x), …, P_L(x)` at a fixed abscissa.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreSequence {
    x: f64,
    values: Vec<f64>,
}

impl LegendreSequence {
    pub fn new(x: f64, degree: usize) -> Result<Self> {
        check_abscissa(x)?;
        let mut values = Vec::with_capacity(degree + 1);
        values.push(1.0);
        if degree >= 1 {
            values.push(x);
        }
        for l in 1..degree {
            let lf = l as f64;
            let next = ((2.0 * lf + 1.0) * x).mul_add(values[l], -lf * values[l - 1]) / (lf + 1.0);
            values.push(next);
        }
        Ok(Self { x, values })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// Highest degree `L` held.
    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `P_l(x)`, with `P_{−1} ≡ 0` available through [`Self::get_signed`].
    pub fn get(&self, l: usize) -> Option<f64> {
        self.values.get(l).copied()
    }

    pub fn get_signed(&self, l: isize) -> Option<f64> {
        match l {
            -1 => Some(0.0),
            l if l >= 0 => self.get(l as usize),
            _ => None,
        }
    }

    /// `|(2l+1) x P_l − (l+1) P_{l+1} − l P_{l−1}|` for `1 ≤ l < L`.
    pub fn recurrence_residual(&self, l: usize) -> Option<f64> {
        if l == 0 || l + 1 > self.degree() {
            return None;
        }
        let lf = l as f64;
        let v = &self.values;
        let lhs = ((2.0 * lf + 1.0) * self.x).mul_add(v[l], -lf * v[l - 1]);
        Some((lhs - (lf + 1.0) * v[l + 1]).abs())
    }

    /// Largest recurrence residual scaled by `1 + |P_l|` over all interior `l`.
    pub fn max_scaled_recurrence_residual(&self) -> f64 {
        (1..self.degree())
            .filter_map(|l| self.recurrence_residual(l).map(|r| r / (1.0 + self.values[l].abs())))
            .fold(0.0, f64::max)
    }
}

/// Convenience wrapper over [`LegendreSequence::new`].
pub fn legendre_sequence(x: f64, degree: usize) -> Result<LegendreSequence> {
    LegendreSequence::new(x, degree)
}

/// Converts a signed degree to `usize`, rejecting negatives.
pub fn degree_from_signed(degree: i64) -> Result<usize> {
    usize::try_from(degree).map_err(|_| Error::Size(format!("negative degree {degree}")))
}

/// `P'_0(x), …, P'_L(x)`.
pub fn legendre_derivatives(x: f64, degree: usize) -> Result<Vec<f64>> {
    let p = LegendreSequence::new(x, degree)?;
    let mut d = Vec::with_capacity(degree + 1);
    d.push(0.0);
    for l in 0..degree {
        d.push(x.mul_add(d[l], (l as f64 + 1.0) * p.values[l]));
    }
    Ok(d)
}

/// `|(2l+1) P_l(x) − P'_{l+1}(x) + P'_{l−1}(x)|` with `P'_{−1} ≡ 0`.
pub fn legendre_derivative_identity_residual(x: f64, l: usize) -> Result<f64> {
    let p = LegendreSequence::new(x, l + 1)?;
    let d = legendre_derivatives(x, l + 1)?;
    let below = if l == 0 { 0.0 } else { d[l - 1] };
    Ok(((2.0 * l as f64 + 1.0) * p.values[l] - d[l + 1] + below).abs())
}

/// Gauss–Legendre nodes and weights on `[−1, 1]`, nodes ascending.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::Size("Gauss-Legendre rule needs at least one node".into()));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        for _ in 0..100 {
            let dx = newton_step(x, n);
            x -= dx;
            if dx.abs() <= 4.0 * f64::EPSILON {
                break;
            }
        }
        let (p, p_prev) = legendre_pair(x, n);
        let dp = nf * (x * p - p_prev) / (x * x - 1.0);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok((nodes, weights))
}

fn newton_step(x: f64, n: usize) -> f64 {
    let (p, p_prev) = legendre_pair(x, n);
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    p / dp
}

// (P_n(x), P_{n-1}(x)) for n >= 1.
fn legendre_pair(x: f64, n: usize) -> (f64, f64) {
    let (mut prev, mut cur) = (1.0, x);
    for l in 1..n {
        let lf = l as f64;
        let next = ((2.0 * lf + 1.0) * x * cur - lf * prev) / (lf + 1.0);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

pub(crate) fn check_abscissa(x: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("Legendre abscissa {x} outside [-1, 1]")));
    }
    Ok(())
}
