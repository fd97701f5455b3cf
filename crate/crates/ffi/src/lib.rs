//! C ABI for the `thomae` crate.
//!
//! Every function returns a [`ThomaeStatus`] and writes results through out
//! pointers. On failure the message is available from [`thomae_last_error`]
//! on the same thread. Handles are opaque and must be released with their
//! matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;
use thomae::regularity::{
    boyd_indices, dyadic_scales, holder_estimate_convergents, holder_estimate_oscillation,
    spectrum, BoydFunction, BoydGrid, Dimension,
};
use thomae::{
    convergents, expand, make_constant, synthesize_prescribed_tau, tau_sequence, upper_darboux,
    CertifiedReal, Constant, ContinuedFraction, Error, Rational, ThomaeParams,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThomaeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InsufficientPrecision = 3,
    /// A result does not fit the C type it is returned in.
    Overflow = 4,
    Panic = 5,
}

/// A real number known to lie in a closed rational interval.
pub struct ThomaeReal(CertifiedReal);

/// Certified continued fraction digits of a [`ThomaeReal`].
pub struct ThomaeCf(ContinuedFraction);

struct Failure(ThomaeStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_precision() {
            ThomaeStatus::InsufficientPrecision
        } else {
            ThomaeStatus::InvalidArgument
        };
        Failure(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ThomaeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            ThomaeStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            ThomaeStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(ThomaeStatus::NullPointer, format!("`{what}` is null"))
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(ThomaeStatus::InvalidArgument, msg.into())
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

fn params(theta_num: i64, theta_den: i64) -> Result<ThomaeParams, Failure> {
    Ok(ThomaeParams::new(Rational::new(theta_num, theta_den)?)?)
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Message of the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn thomae_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn thomae_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// `f_θ(num/den)` with `θ = theta_num/theta_den`.
///
/// # Safety
/// `out` must be null or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn thomae_eval(
    num: i64,
    den: i64,
    theta_num: i64,
    theta_den: i64,
    out: *mut f64,
) -> ThomaeStatus {
    guard(|| {
        let x = Rational::new(num, den)?;
        let v = thomae::eval(&x, &params(theta_num, theta_den)?).to_f64();
        write(out, v, "out")
    })
}

/// One of `sqrt2m1`, `golden_conj`, `e_frac`, `pi_frac` to within `10^-digits`.
///
/// # Safety
/// `name` must be null or a NUL-terminated string; `out` must be null or
/// valid for a write of one pointer.
#[no_mangle]
pub unsafe extern "C" fn thomae_real_constant(
    name: *const c_char,
    digits: u32,
    out: *mut *mut ThomaeReal,
) -> ThomaeStatus {
    guard(|| {
        if name.is_null() {
            return Err(null("name"));
        }
        let name = CStr::from_ptr(name).to_str().map_err(|_| invalid("name is not UTF-8"))?;
        let c: Constant = name.parse()?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed(ThomaeReal(make_constant(c, digits)?)), "out")
    })
}

/// The exact rational `num/den`.
///
/// # Safety
/// `out` must be null or valid for a write of one pointer.
#[no_mangle]
pub unsafe extern "C" fn thomae_real_from_rational(
    num: i64,
    den: i64,
    out: *mut *mut ThomaeReal,
) -> ThomaeStatus {
    guard(|| {
        let x = Rational::new(num, den)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed(ThomaeReal(CertifiedReal::exact(x))), "out")
    })
}

/// An irrational with irrationality exponent `tau`, built from `terms`
/// continued fraction digits.
///
/// # Safety
/// `out` must be null or valid for a write of one pointer.
#[no_mangle]
pub unsafe extern "C" fn thomae_real_synthesize(
    tau: f64,
    terms: usize,
    out: *mut *mut ThomaeReal,
) -> ThomaeStatus {
    guard(|| {
        let s = synthesize_prescribed_tau(tau, terms)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed(ThomaeReal(s.value)), "out")
    })
}

/// Midpoint and radius of the enclosing interval, rounded to `double`.
///
/// # Safety
/// `real` must be null or a live handle; `mid` and `rad` must each be null
/// or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn thomae_real_midpoint(
    real: *const ThomaeReal,
    mid: *mut f64,
    rad: *mut f64,
) -> ThomaeStatus {
    guard(|| {
        let x = &deref(real, "real")?.0;
        if rad.is_null() {
            return Err(null("rad"));
        }
        write(mid, x.mid.to_f64(), "mid")?;
        write(rad, x.rad.to_f64(), "rad")
    })
}

/// # Safety
/// `real` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn thomae_real_free(real: *mut ThomaeReal) {
    if !real.is_null() {
        drop(Box::from_raw(real));
    }
}

/// Up to `max_terms` certified digits of `real`.
///
/// # Safety
/// `real` must be null or a live handle; `out` must be null or valid for a
/// write of one pointer.
#[no_mangle]
pub unsafe extern "C" fn thomae_cf_expand(
    real: *const ThomaeReal,
    max_terms: usize,
    out: *mut *mut ThomaeCf,
) -> ThomaeStatus {
    guard(|| {
        let cf = expand(&deref(real, "real")?.0, max_terms)?;
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed(ThomaeCf(cf)), "out")
    })
}

/// # Safety
/// `cf` must be null or a live handle; `out` must be null or valid for a
/// write of one `size_t`.
#[no_mangle]
pub unsafe extern "C" fn thomae_cf_len(cf: *const ThomaeCf, out: *mut usize) -> ThomaeStatus {
    guard(|| write(out, deref(cf, "cf")?.0.digits.len(), "out"))
}

/// Digit `a_{index+1}`. Fails with `Overflow` above `UINT64_MAX`.
///
/// # Safety
/// `cf` must be null or a live handle; `out` must be null or valid for a
/// write of one `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn thomae_cf_digit(
    cf: *const ThomaeCf,
    index: usize,
    out: *mut u64,
) -> ThomaeStatus {
    guard(|| {
        let digits = &deref(cf, "cf")?.0.digits;
        let d = digits
            .get(index)
            .ok_or_else(|| invalid(format!("index {index} out of range 0..{}", digits.len())))?;
        let d = d
            .to_u64()
            .ok_or_else(|| Failure(ThomaeStatus::Overflow, format!("digit {d} exceeds 64 bits")))?;
        write(out, d, "out")
    })
}

/// # Safety
/// `cf` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn thomae_cf_free(cf: *mut ThomaeCf) {
    if !cf.is_null() {
        drop(Box::from_raw(cf));
    }
}

/// Tail estimate of the irrationality exponent from up to `max_terms`
/// convergents.
///
/// # Safety
/// `real` must be null or a live handle; `out` must be null or valid for a
/// write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn thomae_tau_estimate(
    real: *const ThomaeReal,
    max_terms: usize,
    out: *mut f64,
) -> ThomaeStatus {
    guard(|| {
        let x = &deref(real, "real")?.0;
        let convs = convergents(&expand(x, max_terms)?);
        write(out, tau_sequence(x, &convs)?.tau_hat, "out")
    })
}

/// Hölder exponent of `f_θ` at `real` from its convergents.
///
/// # Safety
/// `real` must be null or a live handle; `out` must be null or valid for a
/// write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn thomae_holder_convergent(
    real: *const ThomaeReal,
    theta_num: i64,
    theta_den: i64,
    max_terms: usize,
    out: *mut f64,
) -> ThomaeStatus {
    guard(|| {
        let x = &deref(real, "real")?.0;
        let rep = holder_estimate_convergents(x, &params(theta_num, theta_den)?, max_terms)?;
        write(out, rep.est_convergent.unwrap_or(f64::NAN), "out")
    })
}

/// Hölder exponent of `f_θ` at `real` from oscillations on the scales
/// `2^-k_from, ..., 2^-k_to`.
///
/// # Safety
/// `real` must be null or a live handle; `out` must be null or valid for a
/// write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn thomae_holder_oscillation(
    real: *const ThomaeReal,
    theta_num: i64,
    theta_den: i64,
    k_from: u32,
    k_to: u32,
    out: *mut f64,
) -> ThomaeStatus {
    guard(|| {
        let x = &deref(real, "real")?.0;
        if k_to > 4096 {
            return Err(invalid("k_to must be at most 4096"));
        }
        let scales = dyadic_scales(k_from, k_to);
        let rep = holder_estimate_oscillation(x, &params(theta_num, theta_den)?, &scales)?;
        write(out, rep.est_oscillation.unwrap_or(f64::NAN), "out")
    })
}

/// Spectrum value at `h`, `-INFINITY` where the level set is empty.
///
/// # Safety
/// `out` must be null or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn thomae_spectrum(
    h: f64,
    theta_num: i64,
    theta_den: i64,
    out: *mut f64,
) -> ThomaeStatus {
    guard(|| {
        let dim = match spectrum(h, &params(theta_num, theta_den)?)?.dim {
            Dimension::Finite(d) => d,
            Dimension::NegInfinity => f64::NEG_INFINITY,
        };
        write(out, dim, "out")
    })
}

/// Upper Darboux sum over `n` equal cells of `[0, 1]`.
///
/// # Safety
/// `out` must be null or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn thomae_upper_darboux(
    n: u64,
    theta_num: i64,
    theta_den: i64,
    out: *mut f64,
) -> ThomaeStatus {
    guard(|| write(out, upper_darboux(n, &params(theta_num, theta_den)?)?.value, "out"))
}

/// Boyd indices of `x^θ (|ln x| + 1)^γ` estimated at `x` on the default grid.
///
/// # Safety
/// `lower` and `upper` must each be null or valid for a write of one `double`.
#[no_mangle]
pub unsafe extern "C" fn thomae_boyd_indices(
    theta: f64,
    gamma: f64,
    x: f64,
    lower: *mut f64,
    upper: *mut f64,
) -> ThomaeStatus {
    guard(|| {
        if upper.is_null() {
            return Err(null("upper"));
        }
        let phi = BoydFunction::new(theta, gamma)?;
        let idx = boyd_indices(&phi, &[x], BoydGrid::default())?;
        write(lower, idx.s_lower, "lower")?;
        write(upper, idx.s_upper, "upper")
    })
}
