//! C ABI over `scatdet`.
//!
//! Families and group descriptors are opaque handles created by `sd_*_new`
//! and released by the matching `sd_*_free`. Every fallible call returns an
//! [`SdStatus`]; on failure the message is available from
//! [`sd_last_error_message`] on the same thread. Strings returned by the
//! library are freed with [`sd_string_free`]. Panics never cross the
//! boundary; they surface as `SD_STATUS_PANIC`.

use scatdet::divisor::{corollary_alpha, count_divisor};
use scatdet::report::{to_json_string, ReportEnvelope};
use scatdet::scattering::{central_value, dirichlet_head, germ_at, phi_eval, ScatteringFamily};
use scatdet::surface::GroupDescriptor;
use scatdet::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Outcome of an `sd_*` call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    Pole = 1,
    Zero = 2,
    Domain = 3,
    Singularity = 4,
    Convergence = 5,
    ContourTooClose = 6,
    NonIntegerWinding = 7,
    /// Null pointer, invalid UTF-8, malformed JSON or a too-small buffer.
    InvalidArgument = 8,
    Panic = 9,
}

/// Opaque scattering family handle.
pub struct SdFamily(ScatteringFamily);

/// Opaque group descriptor handle.
pub struct SdDescriptor(GroupDescriptor);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SdCentralValue {
    pub germ_value: f64,
    pub extrapolated_value: f64,
    pub predicted_sign: i32,
    pub matches: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SdDirichletHead {
    pub cusps: u32,
    pub g1: f64,
    pub d1: f64,
    pub c1: f64,
    pub c2: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SdDivisor {
    pub zeros: u32,
    pub poles: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SdStatus {
    match e {
        Error::Pole(_) => SdStatus::Pole,
        Error::Zero(_) => SdStatus::Zero,
        Error::Domain(_) => SdStatus::Domain,
        Error::Singularity(_) => SdStatus::Singularity,
        Error::Convergence(_) => SdStatus::Convergence,
        Error::ContourTooClose(_) => SdStatus::ContourTooClose,
        Error::NonIntegerWinding(_) => SdStatus::NonIntegerWinding,
    }
}

enum Fail {
    Lib(Error),
    Arg(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard<F: FnOnce() -> std::result::Result<(), Fail>>(f: F) -> SdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SdStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Arg(msg))) => {
            set_error(&msg);
            SdStatus::InvalidArgument
        }
        Err(_) => {
            set_error("panic inside scatdet");
            SdStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> std::result::Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Arg(format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Arg(format!("{what} is not UTF-8")))
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &str) -> std::result::Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Fail::Arg(format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> std::result::Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail::Arg(format!("{what} is null")))
}

unsafe fn family_arg<'a>(p: *const SdFamily) -> std::result::Result<&'a ScatteringFamily, Fail> {
    p.as_ref().map(|f| &f.0).ok_or_else(|| Fail::Arg("family handle is null".into()))
}

unsafe fn descriptor_arg<'a>(p: *const SdDescriptor) -> std::result::Result<&'a GroupDescriptor, Fail> {
    p.as_ref().map(|d| &d.0).ok_or_else(|| Fail::Arg("descriptor handle is null".into()))
}

fn json_out(text: String, out: *mut *mut c_char) -> std::result::Result<(), Fail> {
    let c = CString::new(text).map_err(|_| Fail::Arg("interior NUL in JSON".into()))?;
    unsafe { *out_arg(out, "out")? = c.into_raw() };
    Ok(())
}

/// Message of the last failed call on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn sd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from an `sd_*` call and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a family from `kind` ("modular", "gamma0", "gamma0plus") and a
/// list of distinct primes.
///
/// # Safety
/// `kind` must be a NUL-terminated string, `primes` must point to `n_primes`
/// values (may be null when `n_primes` is 0), `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sd_family_new(
    kind: *const c_char,
    primes: *const u64,
    n_primes: usize,
    out: *mut *mut SdFamily,
) -> SdStatus {
    guard(|| {
        let kind = str_arg(kind, "kind")?;
        let primes = slice_arg(primes, n_primes, "primes")?.to_vec();
        let family = ScatteringFamily::from_parts(kind, primes)?;
        *out_arg(out, "out")? = Box::into_raw(Box::new(SdFamily(family)));
        Ok(())
    })
}

/// Creates a family from `{"family": ..., "primes": [...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_family_from_json(json: *const c_char, out: *mut *mut SdFamily) -> SdStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let family: ScatteringFamily = serde_json::from_str(text).map_err(|e| Fail::Arg(e.to_string()))?;
        *out_arg(out, "out")? = Box::into_raw(Box::new(SdFamily(family)));
        Ok(())
    })
}

/// # Safety
/// `family` must come from `sd_family_new`/`sd_family_from_json` and not be
/// used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sd_family_free(family: *mut SdFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// φ(re + i·im).
///
/// # Safety
/// `family` must be a live handle; `out_re` and `out_im` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_phi_eval(
    family: *const SdFamily,
    re: f64,
    im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> SdStatus {
    guard(|| {
        let v = phi_eval(family_arg(family)?, scatdet::ComplexValue::new(re, im))?;
        *out_arg(out_re, "out_re")? = v.re;
        *out_arg(out_im, "out_im")? = v.im;
        Ok(())
    })
}

/// Laurent germ of φ at the real point `a`: writes the order and `depth`
/// coefficients into `coeffs` (capacity `capacity` ≥ `depth`).
///
/// # Safety
/// `family` must be a live handle; `out_order` writable; `coeffs` must have
/// room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn sd_germ_at(
    family: *const SdFamily,
    a: f64,
    depth: usize,
    out_order: *mut i32,
    coeffs: *mut f64,
    capacity: usize,
) -> SdStatus {
    guard(|| {
        if capacity < depth || coeffs.is_null() {
            return Err(Fail::Arg(format!("coefficient buffer holds {capacity} < depth {depth}")));
        }
        let family = family_arg(family)?;
        if depth < 3 {
            return Err(Error::Domain(format!("germ depth {depth} < 3")).into());
        }
        let germ = germ_at(family, a, depth)?;
        *out_arg(out_order, "out_order")? = germ.order;
        std::slice::from_raw_parts_mut(coeffs, depth).copy_from_slice(&germ.coeffs[..depth]);
        Ok(())
    })
}

/// φ(½) from the germ and by extrapolation, with the predicted sign.
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_central_value(family: *const SdFamily, out: *mut SdCentralValue) -> SdStatus {
    guard(|| {
        let r = central_value(family_arg(family)?)?;
        *out_arg(out, "out")? = SdCentralValue {
            germ_value: r.germ_value,
            extrapolated_value: r.extrapolated_value,
            predicted_sign: r.predicted_sign,
            matches: r.matches,
        };
        Ok(())
    })
}

/// Real zeros N and poles P of φ on (½, ∞).
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_count_divisor(family: *const SdFamily, out: *mut SdDivisor) -> SdStatus {
    guard(|| {
        let d = count_divisor(family_arg(family)?)?;
        *out_arg(out, "out")? = SdDivisor { zeros: d.zeros, poles: d.poles };
        Ok(())
    })
}

/// Leading Dirichlet data (c, g₁, d(1), c₁, c₂).
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_dirichlet_head(family: *const SdFamily, out: *mut SdDirichletHead) -> SdStatus {
    guard(|| {
        let h = dirichlet_head(family_arg(family)?, 1)?;
        *out_arg(out, "out")? = SdDirichletHead { cusps: h.cusps, g1: h.g1, d1: h.d1, c1: h.c1, c2: h.c2 };
        Ok(())
    })
}

/// e^α = g₁ / (π^{c/2} |d(1)|).
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_corollary_alpha(family: *const SdFamily, out: *mut f64) -> SdStatus {
    guard(|| {
        *out_arg(out, "out")? = corollary_alpha(family_arg(family)?)?;
        Ok(())
    })
}

/// Full central-value report as JSON; free the string with `sd_string_free`.
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_central_value_json(family: *const SdFamily, out: *mut *mut c_char) -> SdStatus {
    guard(|| {
        let family = family_arg(family)?;
        let report = central_value(family)?;
        let input = serde_json::to_value(family).map_err(|e| Fail::Arg(e.to_string()))?;
        let env = ReportEnvelope::new("central-value", input, report, "germ 1e-6, extrapolation 1e-4");
        json_out(to_json_string(&env).map_err(|e| Fail::Arg(e.to_string()))?, out)
    })
}

/// Creates a group descriptor (genus, cusps, elliptic orders).
///
/// # Safety
/// `orders` must point to `n_orders` values (may be null when 0); `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sd_descriptor_new(
    genus: u32,
    cusps: u32,
    orders: *const u32,
    n_orders: usize,
    out: *mut *mut SdDescriptor,
) -> SdStatus {
    guard(|| {
        let orders = slice_arg(orders, n_orders, "orders")?.to_vec();
        let d = GroupDescriptor::new(genus, cusps, orders)?;
        *out_arg(out, "out")? = Box::into_raw(Box::new(SdDescriptor(d)));
        Ok(())
    })
}

/// # Safety
/// `desc` must come from `sd_descriptor_new` and not be used afterwards.
/// Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sd_descriptor_free(desc: *mut SdDescriptor) {
    if !desc.is_null() {
        drop(Box::from_raw(desc));
    }
}

/// Hyperbolic volume.
///
/// # Safety
/// `desc` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_descriptor_volume(desc: *const SdDescriptor, out: *mut f64) -> SdStatus {
    guard(|| {
        *out_arg(out, "out")? = descriptor_arg(desc)?.volume();
        Ok(())
    })
}

/// Trivial-zero multiplicity at s = −n by both formulas.
///
/// # Safety
/// `desc` must be a live handle; `out_floor` and `out_sine` writable.
#[no_mangle]
pub unsafe extern "C" fn sd_trivial_multiplicity(
    desc: *const SdDescriptor,
    n: u32,
    out_floor: *mut i64,
    out_sine: *mut f64,
) -> SdStatus {
    guard(|| {
        let r = descriptor_arg(desc)?.multiplicity_report(n);
        *out_arg(out_floor, "out_floor")? = r.floor_formula;
        *out_arg(out_sine, "out_sine")? = r.sine_formula;
        Ok(())
    })
}
