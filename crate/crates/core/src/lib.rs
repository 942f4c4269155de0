//! Quantum Coulomb scattering by partial waves.
//!
//! The crate evaluates the Coulomb scattering amplitude two ways: as the
//! closed form `f(θ) = Γ(1−iβ)/(iΓ(iβ)) · exp[iβ ln sin²(θ/2)] / (2k sin²(θ/2))`
//! and as the partial-wave series `Σ (2l+1) S_l P_l(cos θ) / (2ik)`, which does
//! not converge in the ordinary sense. The series is made computable by Abel
//! damping `e^{−εl}` followed by polynomial extrapolation to `ε = 0`.
//!
//! Modules:
//! - [`special`]: complex log-Gamma and Legendre recurrences.
//! - [`coulomb`]: physical parameters, S-matrix, closed forms, cross section.
//! - [`summation`]: the regularized series and its diagnostics.
//! - [`cli`]: the `coulomb-kit` command-line front end.

pub mod cli;
pub mod coulomb;
mod error;
pub mod special;
pub mod summation;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex numbers used throughout the crate.
pub type ComplexValue = Complex64;
