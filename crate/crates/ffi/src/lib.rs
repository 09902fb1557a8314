//! C ABI over the `h2unknot` library.
//!
//! Every entry point returns an [`H2uStatus`]. Reports are opaque
//! [`H2uReport`] handles released with [`h2u_report_free`]; strings handed
//! out by the library are released with [`h2u_string_free`]. After a
//! non-`OK` status, [`h2u_last_error`] describes the failure on the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use h2unknot::exactmat::IntSymMatrix;
use h2unknot::job::{run_job, JobInput, JobObject, JobOptions, JobSpec};
use h2unknot::obstruction::{ExternalBounds, LickorishVerdict, ObstructionReport, TheoremVerdict};

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum H2uStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The knot or matrix was rejected; see `h2u_last_error`.
    InvalidInput = 3,
    /// A value does not fit the output type.
    Overflow = 4,
    /// An internal consistency check failed.
    Internal = 5,
    /// The library panicked.
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum H2uTheoremVerdict {
    Obstructed = 0,
    NotObstructed = 1,
    /// Determinant one: the test says nothing.
    Vacuous = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum H2uLickorishVerdict {
    Obstructed = 0,
    NotObstructed = 1,
}

/// Externally known bounds. A negative field means "not known".
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct H2uOptions {
    /// Crosscap number.
    pub gamma: i64,
    /// Four-dimensional crosscap number.
    pub gamma_star: i64,
    /// Number of twisted bands known to unknot the knot.
    pub known_band_count: i64,
    /// Nonzero to cross-check the M_Q table against a naive scan.
    pub oracle: i32,
}

/// Opaque analysis result.
pub struct H2uReport(ObstructionReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: H2uStatus, msg: &str) -> H2uStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> H2uStatus) -> H2uStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(H2uStatus::Panic, "panic inside h2unknot"))
}

fn opt(v: i64) -> Option<u64> {
    u64::try_from(v).ok()
}

fn job_options(options: *const H2uOptions) -> JobOptions {
    // SAFETY: caller passes null or a valid pointer
    let Some(o) = (unsafe { options.as_ref() }) else {
        return JobOptions::default();
    };
    JobOptions {
        bounds: ExternalBounds {
            gamma: opt(o.gamma),
            gamma_star: opt(o.gamma_star),
            known_band_count: opt(o.known_band_count),
        },
        oracle: o.oracle != 0,
        ..Default::default()
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, H2uStatus> {
    if s.is_null() {
        return Err(fail(H2uStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(H2uStatus::InvalidUtf8, "string is not UTF-8"))
}

fn finish(input: JobInput, mut options: JobOptions, f0: Option<usize>, out: *mut *mut H2uReport) -> H2uStatus {
    if out.is_null() {
        return fail(H2uStatus::NullPointer, "null output pointer");
    }
    options.f0 = options.f0.or(f0);
    match run_job(&JobSpec { input, options }) {
        Ok(report) => {
            // SAFETY: checked non-null above
            unsafe { *out = Box::into_raw(Box::new(H2uReport(report))) };
            H2uStatus::Ok
        }
        Err(e) => {
            let status = if e.is_internal() { H2uStatus::Internal } else { H2uStatus::InvalidInput };
            fail(status, &format!("{}: {e}", e.name()))
        }
    }
}

/// Analyzes the pretzel knot `P(p, q, r)`.
///
/// # Safety
/// `options` is null or valid; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn h2u_analyze_pretzel(
    p: u64,
    q: u64,
    r: u64,
    options: *const H2uOptions,
    out: *mut *mut H2uReport,
) -> H2uStatus {
    guard(|| finish(JobInput::Pretzel([p, q, r]), job_options(options), None, out))
}

/// Analyzes a `k × k` symmetric matrix given row-major in `entries`.
/// `k = 0` is the unknot and `entries` may then be null.
///
/// # Safety
/// `entries` points to `k * k` values; `options` is null or valid; `out` is
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn h2u_analyze_matrix(
    entries: *const i64,
    k: usize,
    options: *const H2uOptions,
    out: *mut *mut H2uReport,
) -> H2uStatus {
    guard(|| {
        if k > 0 && entries.is_null() {
            return fail(H2uStatus::NullPointer, "null matrix entries");
        }
        let Some(len) = k.checked_mul(k) else {
            return fail(H2uStatus::Overflow, "matrix dimension overflows");
        };
        let flat = if k == 0 { &[][..] } else { std::slice::from_raw_parts(entries, len) };
        let rows: Vec<Vec<i64>> = flat.chunks(k.max(1)).map(<[i64]>::to_vec).collect();
        match IntSymMatrix::from_rows(&rows) {
            Ok(m) => finish(JobInput::Matrix(m), job_options(options), None, out),
            Err(e) => fail(H2uStatus::InvalidInput, &format!("{}: {e}", e.name())),
        }
    })
}

/// Analyzes a PD code such as `"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"`.
/// `f0` selects the deleted black face; pass a negative value for the default.
///
/// # Safety
/// `pd` is a NUL-terminated string; `options` is null or valid; `out` is
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn h2u_analyze_pd(
    pd: *const c_char,
    f0: i64,
    options: *const H2uOptions,
    out: *mut *mut H2uReport,
) -> H2uStatus {
    guard(|| {
        let code = match read_str(pd) {
            Ok(s) => s.to_owned(),
            Err(status) => return status,
        };
        let f0 = usize::try_from(f0).ok();
        finish(JobInput::Pd(code), job_options(options), f0, out)
    })
}

/// Analyzes a JSON job object: exactly one of `pd`, `pretzel`, `matrix`,
/// `unknot`, and optionally `f0`.
///
/// # Safety
/// `job` is a NUL-terminated string; `options` is null or valid; `out` is
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn h2u_analyze_json(
    job: *const c_char,
    options: *const H2uOptions,
    out: *mut *mut H2uReport,
) -> H2uStatus {
    guard(|| {
        let text = match read_str(job) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match JobObject::parse(text).and_then(JobObject::into_input) {
            Ok((input, f0)) => finish(input, job_options(options), f0, out),
            Err(e) => fail(H2uStatus::InvalidInput, &format!("{}: {e}", e.name())),
        }
    })
}

/// # Safety
/// `report` is null or was returned by an `h2u_analyze_*` call and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn h2u_report_free(report: *mut H2uReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

unsafe fn with_report<'a>(report: *const H2uReport) -> Result<&'a ObstructionReport, H2uStatus> {
    report.as_ref().map(|r| &r.0).ok_or_else(|| fail(H2uStatus::NullPointer, "null report"))
}

/// Knot determinant, the order of the first homology of the double
/// branched cover.
///
/// # Safety
/// `report` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn h2u_report_determinant(report: *const H2uReport, out: *mut u64) -> H2uStatus {
    let r = match with_report(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    if out.is_null() {
        return fail(H2uStatus::NullPointer, "null output pointer");
    }
    match u64::try_from(&r.p) {
        Ok(p) => {
            *out = p;
            H2uStatus::Ok
        }
        Err(_) => fail(H2uStatus::Overflow, "determinant exceeds 64 bits"),
    }
}

/// # Safety
/// `report` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn h2u_report_theorem_verdict(
    report: *const H2uReport,
    out: *mut H2uTheoremVerdict,
) -> H2uStatus {
    let r = match with_report(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    if out.is_null() {
        return fail(H2uStatus::NullPointer, "null output pointer");
    }
    *out = match r.theorem.verdict {
        TheoremVerdict::Obstructed => H2uTheoremVerdict::Obstructed,
        TheoremVerdict::NotObstructed => H2uTheoremVerdict::NotObstructed,
        TheoremVerdict::Vacuous => H2uTheoremVerdict::Vacuous,
    };
    H2uStatus::Ok
}

/// # Safety
/// `report` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn h2u_report_lickorish_verdict(
    report: *const H2uReport,
    out: *mut H2uLickorishVerdict,
) -> H2uStatus {
    let r = match with_report(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    if out.is_null() {
        return fail(H2uStatus::NullPointer, "null output pointer");
    }
    *out = match r.lickorish.verdict {
        LickorishVerdict::Obstructed => H2uLickorishVerdict::Obstructed,
        LickorishVerdict::NotObstructed => H2uLickorishVerdict::NotObstructed,
    };
    H2uStatus::Ok
}

/// Bounds on the H(2)-unknotting number. `*upper` is -1 when no upper
/// bound is known.
///
/// # Safety
/// `report` is a live handle; `lower` and `upper` are valid for writes.
#[no_mangle]
pub unsafe extern "C" fn h2u_report_bounds(report: *const H2uReport, lower: *mut i64, upper: *mut i64) -> H2uStatus {
    let r = match with_report(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    if lower.is_null() || upper.is_null() {
        return fail(H2uStatus::NullPointer, "null output pointer");
    }
    let b = &r.u2_bounds;
    let (Ok(lo), Ok(hi)) = (i64::try_from(b.lower), b.upper.map_or(Ok(-1), i64::try_from)) else {
        return fail(H2uStatus::Overflow, "bound exceeds 63 bits");
    };
    *lower = lo;
    *upper = hi;
    H2uStatus::Ok
}

/// Full report as pretty-printed JSON. Release with `h2u_string_free`.
///
/// # Safety
/// `report` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn h2u_report_to_json(report: *const H2uReport, out: *mut *mut c_char) -> H2uStatus {
    let r = match with_report(report) {
        Ok(r) => r,
        Err(s) => return s,
    };
    if out.is_null() {
        return fail(H2uStatus::NullPointer, "null output pointer");
    }
    let json = match serde_json::to_string_pretty(r) {
        Ok(s) => s,
        Err(e) => return fail(H2uStatus::Internal, &e.to_string()),
    };
    match CString::new(json) {
        Ok(c) => {
            *out = c.into_raw();
            H2uStatus::Ok
        }
        Err(e) => fail(H2uStatus::Internal, &e.to_string()),
    }
}

/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn h2u_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or an empty string.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn h2u_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn h2u_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}
