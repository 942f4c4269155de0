//! C ABI over `coulomb-kit`.
//!
//! Every fallible function returns a [`CkStatus`] and writes its result
//! through an out-pointer. On failure the out-pointer is left untouched and
//! [`ck_last_error_message`] describes the error on the calling thread.
//! Handles are opaque and must be released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coulomb_kit::coulomb::{self, AmplitudeMethod, AmplitudeResult, PhysicalParams};
use coulomb_kit::special;
use coulomb_kit::summation::{self, SummationConfig};
use coulomb_kit::Error;
use num_complex::Complex64;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CkStatus {
    Ok = 0,
    NullPointer = 1,
    Pole = 2,
    Overflow = 3,
    Domain = 4,
    Size = 5,
    Config = 6,
    LadderDrift = 7,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CkComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for CkComplex {
    fn from(z: Complex64) -> Self {
        CkComplex { re: z.re, im: z.im }
    }
}

impl From<CkComplex> for Complex64 {
    fn from(z: CkComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CkMethod {
    ClosedForm = 0,
    RegularizedSeries = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CkPartialWave {
    pub l: usize,
    pub s: CkComplex,
    /// Phase shift in (−π, π].
    pub delta: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CkAmplitude {
    pub theta: f64,
    pub f: CkComplex,
    pub method: CkMethod,
    pub error_estimate: f64,
}

impl From<AmplitudeResult> for CkAmplitude {
    fn from(r: AmplitudeResult) -> Self {
        CkAmplitude {
            theta: r.theta,
            f: r.f.into(),
            method: match r.method {
                AmplitudeMethod::ClosedForm => CkMethod::ClosedForm,
                AmplitudeMethod::RegularizedSeries => CkMethod::RegularizedSeries,
            },
            error_estimate: r.error_estimate,
        }
    }
}

/// Wavenumber and Coulomb strength.
pub struct CkParams(PhysicalParams);

/// Damping schedule, truncation order and extrapolation order.
pub struct CkSummationConfig(SummationConfig);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CkStatus {
    match e {
        Error::Pole(_) => CkStatus::Pole,
        Error::Overflow(_) => CkStatus::Overflow,
        Error::Domain(_) => CkStatus::Domain,
        Error::Size(_) => CkStatus::Size,
        Error::Config(_) => CkStatus::Config,
        Error::LadderDrift { .. } => CkStatus::LadderDrift,
    }
}

enum Failure {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CkStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_last_error(format!("{what} is null"));
            CkStatus::NullPointer
        }
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            CkStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    // SAFETY: the caller passes a pointer from the matching constructor or null.
    unsafe { p.as_ref() }.ok_or(Failure::Null(what))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    // SAFETY: non-null and, per the contract, valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    unsafe { write(out, Box::into_raw(Box::new(value))) }
}

/// Message for the last failed call on this thread, or null if none.
/// The pointer is valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ck_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_params_new(k: f64, beta: f64, out: *mut *mut CkParams) -> CkStatus {
    guard(|| {
        let p = PhysicalParams::new(k, beta)?;
        unsafe { write_handle(out, CkParams(p)) }
    })
}

/// Derives `k` and `β` from mass, coupling, energy and ħ.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_params_from_physical(
    mu: f64,
    kappa: f64,
    energy: f64,
    hbar: f64,
    out: *mut *mut CkParams,
) -> CkStatus {
    guard(|| {
        let p = coulomb::params_from_physical(mu, kappa, energy, hbar)?;
        unsafe { write_handle(out, CkParams(p)) }
    })
}

/// # Safety
/// `params` must come from a `ck_params_*` constructor or be null.
#[no_mangle]
pub unsafe extern "C" fn ck_params_k(params: *const CkParams) -> f64 {
    unsafe { params.as_ref() }.map_or(f64::NAN, |p| p.0.k())
}

/// # Safety
/// `params` must come from a `ck_params_*` constructor or be null.
#[no_mangle]
pub unsafe extern "C" fn ck_params_beta(params: *const CkParams) -> f64 {
    unsafe { params.as_ref() }.map_or(f64::NAN, |p| p.0.beta())
}

/// # Safety
/// `params` must come from a `ck_params_*` constructor, not yet freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn ck_params_free(params: *mut CkParams) {
    if !params.is_null() {
        // SAFETY: allocated by Box::into_raw in a constructor.
        drop(unsafe { Box::from_raw(params) });
    }
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_config_default(out: *mut *mut CkSummationConfig) -> CkStatus {
    guard(|| unsafe { write_handle(out, CkSummationConfig(SummationConfig::default())) })
}

/// `levels` values `eps_max · ratio^j` with the matching truncation order.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_config_geometric(
    eps_max: f64,
    ratio: f64,
    levels: usize,
    extrapolation_order: usize,
    out: *mut *mut CkSummationConfig,
) -> CkStatus {
    guard(|| {
        let cfg = SummationConfig::geometric(eps_max, ratio, levels, extrapolation_order)?;
        unsafe { write_handle(out, CkSummationConfig(cfg)) }
    })
}

/// # Safety
/// `config` must come from a `ck_config_*` constructor.
#[no_mangle]
pub unsafe extern "C" fn ck_config_set_l_max(config: *mut CkSummationConfig, l_max: usize) -> CkStatus {
    guard(|| {
        // SAFETY: see function contract.
        let cfg = unsafe { config.as_mut() }.ok_or(Failure::Null("config"))?;
        cfg.0 = cfg.0.clone().with_l_max(l_max)?;
        Ok(())
    })
}

/// Truncation order, or 0 for a null handle.
///
/// # Safety
/// `config` must come from a `ck_config_*` constructor or be null.
#[no_mangle]
pub unsafe extern "C" fn ck_config_l_max(config: *const CkSummationConfig) -> usize {
    unsafe { config.as_ref() }.map_or(0, |c| c.0.l_max())
}

/// # Safety
/// `config` must come from a `ck_config_*` constructor, not yet freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn ck_config_free(config: *mut CkSummationConfig) {
    if !config.is_null() {
        // SAFETY: allocated by Box::into_raw in a constructor.
        drop(unsafe { Box::from_raw(config) });
    }
}

/// # Safety
/// `params` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_s_matrix(params: *const CkParams, l: usize, out: *mut CkPartialWave) -> CkStatus {
    guard(|| {
        let p = unsafe { as_ref(params, "params") }?;
        let w = coulomb::s_matrix(l, &p.0)?;
        unsafe {
            write(
                out,
                CkPartialWave {
                    l: w.l,
                    s: w.s.into(),
                    delta: w.delta,
                },
            )
        }
    })
}

/// # Safety
/// `params` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_closed_amplitude(params: *const CkParams, theta: f64, out: *mut CkAmplitude) -> CkStatus {
    guard(|| {
        let p = unsafe { as_ref(params, "params") }?;
        let r = coulomb::closed_amplitude(theta, &p.0)?;
        unsafe { write(out, r.into()) }
    })
}

/// Pass a null `config` for the default schedule.
///
/// # Safety
/// `params` must be a live handle, `config` a live handle or null, and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_series_amplitude(
    params: *const CkParams,
    config: *const CkSummationConfig,
    theta: f64,
    out: *mut CkAmplitude,
) -> CkStatus {
    guard(|| {
        let p = unsafe { as_ref(params, "params") }?;
        let default;
        let cfg = match unsafe { config.as_ref() } {
            Some(c) => &c.0,
            None => {
                default = SummationConfig::default();
                &default
            }
        };
        let r = summation::series_amplitude(theta, &p.0, cfg)?;
        unsafe { write(out, r.into()) }
    })
}

/// # Safety
/// `params` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_differential_cross_section(params: *const CkParams, theta: f64, out: *mut f64) -> CkStatus {
    guard(|| {
        let p = unsafe { as_ref(params, "params") }?;
        let d = coulomb::differential_cross_section(theta, &p.0)?;
        unsafe { write(out, d) }
    })
}

/// Principal branch of ln Γ(z).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_log_gamma(z: CkComplex, out: *mut CkComplex) -> CkStatus {
    guard(|| {
        let v = special::log_gamma(z.into())?;
        unsafe { write(out, v.into()) }
    })
}

/// Γ(a)/Γ(b).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ck_gamma_ratio(a: CkComplex, b: CkComplex, out: *mut CkComplex) -> CkStatus {
    guard(|| {
        let v = special::gamma_ratio(a.into(), b.into())?;
        unsafe { write(out, v.into()) }
    })
}
