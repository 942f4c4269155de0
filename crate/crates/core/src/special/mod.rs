//! Special functions: complex log-Gamma and Legendre polynomials.

mod gamma;
mod legendre;

pub(crate) use gamma::wrap_pi;
pub use gamma::{gamma_ratio, log_gamma, MAX_ARGUMENT};
pub(crate) use legendre::check_abscissa;
pub use legendre::{
    degree_from_signed, gauss_legendre, legendre_derivative_identity_residual, legendre_derivatives, legendre_sequence,
    LegendreSequence,
};
