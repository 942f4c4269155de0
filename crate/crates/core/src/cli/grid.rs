use std::f64::consts::PI;

use crate::coulomb::FORWARD_EXCLUSION;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Spacing {
    Linear,
    Log,
}

impl Spacing {
    pub fn as_str(self) -> &'static str {
        match self {
            Spacing::Linear => "linear",
            Spacing::Log => "log",
        }
    }
}

/// Ordered scattering angles in `(0, π]`; the forward direction is excluded
/// at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleGrid {
    theta_min: f64,
    theta_max: f64,
    count: usize,
    spacing: Spacing,
}

impl AngleGrid {
    pub fn new(theta_min: f64, theta_max: f64, count: usize, spacing: Spacing) -> Result<Self> {
        if count == 0 {
            return Err(Error::config("angle grid needs count >= 1"));
        }
        if !theta_min.is_finite() || theta_min <= FORWARD_EXCLUSION {
            return Err(Error::domain(format!(
                "theta_min = {theta_min} must be > 0; the forward direction is excluded"
            )));
        }
        if !theta_max.is_finite() || theta_max > PI {
            return Err(Error::domain(format!("theta_max = {theta_max} must be <= pi")));
        }
        if theta_min > theta_max {
            return Err(Error::config(format!(
                "theta_min {theta_min} exceeds theta_max {theta_max}"
            )));
        }
        Ok(Self {
            theta_min,
            theta_max,
            count,
            spacing,
        })
    }

    pub fn theta_min(&self) -> f64 {
        self.theta_min
    }

    pub fn theta_max(&self) -> f64 {
        self.theta_max
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    /// Grid points, first and last pinned to the end points.
    pub fn angles(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.theta_min];
        }
        let n = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    return self.theta_max;
                }
                let t = i as f64 / n;
                match self.spacing {
                    Spacing::Linear => self.theta_min + t * (self.theta_max - self.theta_min),
                    Spacing::Log => self.theta_min * (self.theta_max / self.theta_min).powf(t),
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_and_log() {
        let g = AngleGrid::new(0.1, 0.4, 4, Spacing::Linear).unwrap();
        let a = g.angles();
        assert_eq!(a.len(), 4);
        assert_eq!((a[0], a[3]), (0.1, 0.4));
        assert!((a[1] - 0.2).abs() < 1e-15);
        let g = AngleGrid::new(0.01, 1.0, 3, Spacing::Log).unwrap();
        let a = g.angles();
        assert!((a[1] - 0.1).abs() < 1e-15);
        assert_eq!(a[2], 1.0);
        assert_eq!(AngleGrid::new(0.3, 0.3, 1, Spacing::Log).unwrap().angles(), vec![0.3]);
    }

    #[test]
    fn rejects_forward_and_bad_ranges() {
        assert!(matches!(
            AngleGrid::new(0.0, 1.0, 3, Spacing::Linear),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            AngleGrid::new(0.1, 3.5, 3, Spacing::Linear),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            AngleGrid::new(0.5, 0.1, 3, Spacing::Linear),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            AngleGrid::new(0.1, 0.5, 0, Spacing::Linear),
            Err(Error::Config(_))
        ));
    }
}
