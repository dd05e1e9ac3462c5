//! C ABI over `cyclic-chroma`.
//!
//! Colorings and verification reports cross the boundary as opaque handles
//! owned by the caller and released with the matching `*_free` function.
//! Every fallible call returns a [`CcStatus`]; on failure a message is
//! available from [`cc_last_error`] on the same thread. Strings handed out
//! by this library are released with [`cc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclic_chroma::construct::Construction;
use cyclic_chroma::{
    chi_prime, construct, contains, decompose, forbidden_set, verify, CycleColoring, Error, Mode,
    Reason, Searcher, VerificationReport,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Infeasible = 3,
    SearchBound = 4,
    Parse = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcMode {
    Cyclic = 0,
    Interval = 1,
}

impl From<CcMode> for Mode {
    fn from(m: CcMode) -> Mode {
        match m {
            CcMode::Cyclic => Mode::CyclicInterval,
            CcMode::Interval => Mode::Interval,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcReason {
    NotProper = 0,
    NotInterval = 1,
    NotCyclicInterval = 2,
}

impl From<Reason> for CcReason {
    fn from(r: Reason) -> Self {
        match r {
            Reason::NotProper => CcReason::NotProper,
            Reason::NotInterval => CcReason::NotInterval,
            Reason::NotCyclicInterval => CcReason::NotCyclicInterval,
        }
    }
}

/// Opaque coloring handle.
pub struct CcColoring(CycleColoring);

/// Opaque verification report handle.
pub struct CcReport(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: CcStatus, msg: impl Into<String>) -> CcStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> CcStatus {
    let status = match e {
        Error::Domain(_) => CcStatus::Domain,
        Error::SearchBound { .. } => CcStatus::SearchBound,
        Error::Parse(_) => CcStatus::Parse,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), CcStatus>) -> CcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(CcStatus::Panic, "panic inside cyclic-chroma"),
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, CcStatus> {
    p.as_ref()
        .ok_or_else(|| fail(CcStatus::NullPointer, "null handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), CcStatus> {
    if out.is_null() {
        return Err(fail(CcStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_slice(
    values: &[usize],
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> Result<(), CcStatus> {
    write_out(out_len, values.len())?;
    if values.len() > cap {
        return Err(fail(
            CcStatus::BufferTooSmall,
            format!("need room for {} values, got {cap}", values.len()),
        ));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(fail(CcStatus::NullPointer, "null buffer"));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(())
}

unsafe fn write_string(s: String, out: *mut *mut c_char) -> Result<(), CcStatus> {
    let c = CString::new(s).map_err(|_| fail(CcStatus::Panic, "interior NUL"))?;
    write_out(out, c.into_raw())
}

fn searcher(max_n: usize) -> Searcher {
    if max_n == 0 {
        Searcher::default()
    } else {
        Searcher::new(max_n)
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn cc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a coloring from `len` colors for edges `e_1..e_len`.
///
/// # Safety
/// `colors` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_coloring_new(
    t: usize,
    colors: *const usize,
    len: usize,
    out: *mut *mut CcColoring,
) -> CcStatus {
    guard(|| {
        if colors.is_null() && len > 0 {
            return Err(fail(CcStatus::NullPointer, "null colors"));
        }
        let values = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(colors, len).to_vec()
        };
        let c = CycleColoring::new(len, t, values).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(CcColoring(c))))
    })
}

/// Parses a `{"n":..,"t":..,"colors":[..]}` record.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_coloring_from_json(
    json: *const c_char,
    out: *mut *mut CcColoring,
) -> CcStatus {
    guard(|| {
        let text = deref(json)
            .map(|_| CStr::from_ptr(json))?
            .to_str()
            .map_err(|e| fail(CcStatus::Parse, e.to_string()))?;
        let c = CycleColoring::from_json(text).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(CcColoring(c))))
    })
}

/// # Safety
/// `c` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_coloring_free(c: *mut CcColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_coloring_n(c: *const CcColoring) -> usize {
    c.as_ref().map_or(0, |c| c.0.n())
}

/// Color count, or 0 for NULL.
///
/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_coloring_t(c: *const CcColoring) -> usize {
    c.as_ref().map_or(0, |c| c.0.t())
}

/// Copies the colors into `buf`. `out_len` always receives the edge count;
/// `CC_STATUS_BUFFER_TOO_SMALL` is returned when `cap` is short.
///
/// # Safety
/// `buf` must have room for `cap` values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_coloring_colors(
    c: *const CcColoring,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> CcStatus {
    guard(|| write_slice(deref(c)?.0.colors(), buf, cap, out_len))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable. Free the result with
/// [`cc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cc_coloring_to_json(
    c: *const CcColoring,
    out: *mut *mut c_char,
) -> CcStatus {
    guard(|| write_string(deref(c)?.0.to_json(), out))
}

/// Canonical cyclically interval `t`-coloring of `C(n)`.
/// Returns `CC_STATUS_INFEASIBLE` when none exists; the reason is in
/// [`cc_last_error`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_construct(n: usize, t: usize, out: *mut *mut CcColoring) -> CcStatus {
    guard(|| match construct(n, t).map_err(from_error)? {
        Construction::Witness(c) => write_out(out, Box::into_raw(Box::new(CcColoring(c)))),
        Construction::Infeasible(why) => Err(fail(CcStatus::Infeasible, why.to_string())),
    })
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_verify(
    c: *const CcColoring,
    mode: CcMode,
    out: *mut *mut CcReport,
) -> CcStatus {
    guard(|| {
        let report = verify(&deref(c)?.0, mode.into());
        write_out(out, Box::into_raw(Box::new(CcReport(report))))
    })
}

/// # Safety
/// `r` must be NULL or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn cc_report_free(r: *mut CcReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be NULL or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn cc_report_valid(r: *const CcReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.mode_satisfied)
}

/// # Safety
/// `r` must be NULL or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn cc_report_proper(r: *const CcReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.proper)
}

/// # Safety
/// `r` must be NULL or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn cc_report_surjective(r: *const CcReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.surjective)
}

/// # Safety
/// `r` must be NULL or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn cc_report_violation_count(r: *const CcReport) -> usize {
    r.as_ref().map_or(0, |r| r.0.violations.len())
}

/// Reads violation `index` (0-based, ascending vertex order).
///
/// # Safety
/// `r` must be a live report handle; all output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_report_violation(
    r: *const CcReport,
    index: usize,
    vertex: *mut usize,
    color_before: *mut usize,
    color_after: *mut usize,
    reason: *mut CcReason,
) -> CcStatus {
    guard(|| {
        let report = &deref(r)?.0;
        let v = report.violations.get(index).ok_or_else(|| {
            fail(
                CcStatus::Domain,
                format!("violation {index} of {}", report.violations.len()),
            )
        })?;
        write_out(vertex, v.vertex)?;
        write_out(color_before, v.palette[0])?;
        write_out(color_after, v.palette[1])?;
        write_out(reason, v.reason.into())
    })
}

/// # Safety
/// `r` must be a live report handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_report_to_json(r: *const CcReport, out: *mut *mut c_char) -> CcStatus {
    guard(|| write_string(deref(r)?.0.to_json(), out))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_chi_prime(n: usize, out: *mut usize) -> CcStatus {
    guard(|| write_out(out, chi_prime(n).map_err(from_error)?))
}

/// Whether `C(n)` has a `t`-coloring in `mode`, from the closed form.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_contains(n: usize, t: usize, mode: CcMode, out: *mut bool) -> CcStatus {
    guard(|| {
        let found = match mode {
            CcMode::Cyclic => contains(n, t),
            CcMode::Interval => cyclic_chroma::theta::contains_interval(n, t),
        };
        write_out(out, found.map_err(from_error)?)
    })
}

/// Feasible `t` values for `C(n)`, ascending.
///
/// # Safety
/// `buf` must have room for `cap` values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_theta(
    n: usize,
    mode: CcMode,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> CcStatus {
    guard(|| {
        let set = cyclic_chroma::theta::theta(n, mode.into()).map_err(from_error)?;
        write_slice(&set.members, buf, cap, out_len)
    })
}

/// The forbidden gap of `C(n)`, `n >= 5`.
///
/// # Safety
/// `buf` must have room for `cap` values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_forbidden_set(
    n: usize,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> CcStatus {
    guard(|| write_slice(&forbidden_set(n).map_err(from_error)?, buf, cap, out_len))
}

/// Exhaustive existence check. `max_n == 0` selects the default bound.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_exists_search(
    n: usize,
    t: usize,
    mode: CcMode,
    max_n: usize,
    out: *mut bool,
) -> CcStatus {
    guard(|| {
        write_out(
            out,
            searcher(max_n)
                .exists(n, t, mode.into())
                .map_err(from_error)?,
        )
    })
}

/// Exhaustive count of valid colorings. `max_n == 0` selects the default bound.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_count(
    n: usize,
    t: usize,
    mode: CcMode,
    max_n: usize,
    out: *mut u64,
) -> CcStatus {
    guard(|| {
        write_out(
            out,
            searcher(max_n)
                .count(n, t, mode.into())
                .map_err(from_error)?,
        )
    })
}

/// Decomposition of a cyclically interval coloring, as JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable. Free the result with
/// [`cc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cc_decompose_json(
    c: *const CcColoring,
    out: *mut *mut c_char,
) -> CcStatus {
    guard(|| {
        let d = decompose(&deref(c)?.0).map_err(from_error)?;
        let json = serde_json::to_string(&d).map_err(|e| fail(CcStatus::Panic, e.to_string()))?;
        write_string(json, out)
    })
}
