//! C ABI over `gorlin`.
//!
//! Ownership rules:
//! - a `GorlinResolution*` returned through an out-parameter is owned by the
//!   caller and released with `gorlin_resolution_free`;
//! - every `char*` returned through an out-parameter is owned by the caller
//!   and released with `gorlin_string_free`;
//! - `gorlin_last_error_message` returns a borrowed pointer that stays valid
//!   until the next failing call on the same thread.
//!
//! No function unwinds across the boundary; a panic becomes `GORLIN_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gorlin::{build_resolution, verify, Error, InverseSystem, PolyMatrix, ResolutionComplex};

/// Result of every fallible call. Values 0 to 3 agree with the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GorlinStatus {
    Ok = 0,
    /// A verification check failed.
    CheckFailed = 1,
    /// Malformed input or an out-of-range argument.
    InvalidInput = 2,
    /// The catalecticant determinant vanishes.
    Degenerate = 3,
    /// The symbolic computation exceeds the supported size.
    Capacity = 4,
    /// A required pointer argument was null.
    NullPointer = 5,
    /// An internal panic was caught.
    Panic = 6,
}

/// Which differential an entry accessor reads: `b1`, `b2` or `b3`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GorlinMap {
    B1 = 1,
    B2 = 2,
    B3 = 3,
}

/// Opaque handle to a built complex.
pub struct GorlinResolution {
    inner: ResolutionComplex,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

struct Failure(GorlinStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::DegenerateInverseSystem => GorlinStatus::Degenerate,
            Error::Capacity(_) => GorlinStatus::Capacity,
            _ => GorlinStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(GorlinStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any failure message and converts panics.
fn guard(f: impl FnOnce() -> Result<GorlinStatus, Failure>) -> GorlinStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {message}"));
            GorlinStatus::Panic
        }
    }
}

unsafe fn resolution<'a>(res: *const GorlinResolution) -> Result<&'a ResolutionComplex, Failure> {
    res.as_ref()
        .map(|r| &r.inner)
        .ok_or_else(|| null("resolution"))
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<GorlinStatus, Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(text)
        .map_err(|_| Failure(GorlinStatus::InvalidInput, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(GorlinStatus::Ok)
}

unsafe fn write_handle(
    out: *mut *mut GorlinResolution,
    built: gorlin::Result<ResolutionComplex>,
) -> Result<GorlinStatus, Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = ptr::null_mut();
    let inner = built?;
    *out = Box::into_raw(Box::new(GorlinResolution { inner }));
    Ok(GorlinStatus::Ok)
}

fn map_of(res: &ResolutionComplex, map: GorlinMap) -> &PolyMatrix {
    match map {
        GorlinMap::B1 => res.b1(),
        GorlinMap::B2 => res.b2(),
        GorlinMap::B3 => res.b3(),
    }
}

/// Builds the specialized complex from an inverse-system JSON document
/// (`{"n": 3, "coefficients": [{"exponents": [a, b, c], "value": "p/q"}, ...]}`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_from_json(
    json: *const c_char,
    out: *mut *mut GorlinResolution,
) -> GorlinStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| Failure(GorlinStatus::InvalidInput, "json is not UTF-8".into()))?;
        let built = InverseSystem::from_json(text).and_then(|phi| build_resolution(&phi));
        write_handle(out, built)
    })
}

/// Builds the symbolic complex over Z[x, y, z, t] for `n` in 2..=3.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_generic(
    n: u32,
    out: *mut *mut GorlinResolution,
) -> GorlinStatus {
    guard(|| {
        write_handle(
            out,
            InverseSystem::generic(n).and_then(|phi| build_resolution(&phi)),
        )
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `res` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_free(res: *mut GorlinResolution) {
    if !res.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(res))));
    }
}

/// The parameter `n`; `Φ` has degree `2n - 2`. Returns 0 for a null handle.
///
/// # Safety
/// `res` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_n(res: *const GorlinResolution) -> u32 {
    res.as_ref().map_or(0, |r| r.inner.n())
}

/// 1 for the generic ring, 0 for the specialized one, -1 for a null handle.
///
/// # Safety
/// `res` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_is_generic(res: *const GorlinResolution) -> i32 {
    res.as_ref()
        .map_or(-1, |r| (r.inner.ring() == gorlin::Ring::Generic) as i32)
}

/// Writes the catalecticant determinant as text.
///
/// # Safety
/// `res` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_delta(
    res: *const GorlinResolution,
    out: *mut *mut c_char,
) -> GorlinStatus {
    guard(|| write_string(out, resolution(res)?.delta().to_string()))
}

/// Writes the row and column counts of one differential.
///
/// # Safety
/// `res` must be a live handle; `rows` and `cols` writable.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_shape(
    res: *const GorlinResolution,
    map: GorlinMap,
    rows: *mut usize,
    cols: *mut usize,
) -> GorlinStatus {
    guard(|| {
        let m = map_of(resolution(res)?, map);
        if rows.is_null() || cols.is_null() {
            return Err(null("output pointer"));
        }
        *rows = m.nrows();
        *cols = m.ncols();
        Ok(GorlinStatus::Ok)
    })
}

/// Writes entry `(row, col)` of one differential as text, e.g. `"-54*x"`.
///
/// # Safety
/// `res` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_entry(
    res: *const GorlinResolution,
    map: GorlinMap,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> GorlinStatus {
    guard(|| {
        let m = map_of(resolution(res)?, map);
        if row >= m.nrows() || col >= m.ncols() {
            return Err(Failure(
                GorlinStatus::InvalidInput,
                format!("entry ({row}, {col}) outside {} x {}", m.nrows(), m.ncols()),
            ));
        }
        write_string(out, m.get(row, col).to_string())
    })
}

/// Writes the full JSON dump (twists, T, Q, b1, b2, b3).
///
/// # Safety
/// `res` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_to_json(
    res: *const GorlinResolution,
    out: *mut *mut c_char,
) -> GorlinStatus {
    guard(|| {
        let json = serde_json::to_string(&resolution(res)?.to_json()).map_err(Error::from)?;
        write_string(out, json)
    })
}

/// Runs every applicable check. Returns `Ok` when all required checks pass
/// and `CheckFailed` otherwise. The JSON report is written to `report` when
/// it is non-null.
///
/// # Safety
/// `res` must be a live handle; `report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn gorlin_resolution_verify(
    res: *const GorlinResolution,
    report: *mut *mut c_char,
) -> GorlinStatus {
    guard(|| {
        let r = verify::full_report(resolution(res)?)?;
        if !report.is_null() {
            write_string(report, serde_json::to_string(&r).map_err(Error::from)?)?;
        }
        if r.passed() {
            Ok(GorlinStatus::Ok)
        } else {
            let failed: Vec<&str> = r
                .checks
                .iter()
                .filter(|c| c.required && !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            set_error(format!("failed checks: {}", failed.join(", ")));
            Ok(GorlinStatus::CheckFailed)
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gorlin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failing call on this thread, or null.
#[no_mangle]
pub extern "C" fn gorlin_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn gorlin_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
