//! C interface: opaque root-system handles, integer error codes, and a
//! JSON-in/JSON-out entry point covering every operation of the core crate.
//!
//! Conventions: functions return 0 on success and a nonzero `MINLINES_ERR_*`
//! code otherwise; strings handed out by this library must be released with
//! `minlines_string_free`; handles with their matching `_free` function.
//! All argument strings are NUL-terminated UTF-8.

use minlines::rootsys::RootSystem;
use minlines::Error;
use std::ffi::{c_char, CStr, CString};
use std::sync::Arc;

/// Success.
pub const MINLINES_OK: i32 = 0;
/// Internal invariant violation or enumeration-cap overflow.
pub const MINLINES_ERR_INTERNAL: i32 = 1;
/// Invalid input (bad type string, non-reduced word, precondition failure).
pub const MINLINES_ERR_INPUT: i32 = 2;
/// Null pointer or malformed UTF-8/JSON at the boundary.
pub const MINLINES_ERR_ARGUMENT: i32 = 3;

/// Opaque handle to an immutable root system.
pub struct MinlinesSystem {
    inner: Arc<RootSystem>,
}

fn code_for(err: &Error) -> i32 {
    match err {
        Error::Internal(_) | Error::EnumerationCap(_) => MINLINES_ERR_INTERNAL,
        _ => MINLINES_ERR_INPUT,
    }
}

/// # Safety
/// `s` must be a valid NUL-terminated string or null.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, i32> {
    if s.is_null() {
        return Err(MINLINES_ERR_ARGUMENT);
    }
    CStr::from_ptr(s).to_str().map_err(|_| MINLINES_ERR_ARGUMENT)
}

fn hand_out(s: String, out: *mut *mut c_char) -> i32 {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            MINLINES_OK
        }
        Err(_) => MINLINES_ERR_INTERNAL,
    }
}

/// Parse a Dynkin type string (e.g. "A4", "D5", "A2xA1") into a handle.
///
/// # Safety
/// `type_str` must be NUL-terminated; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn minlines_system_new(
    type_str: *const c_char,
    out: *mut *mut MinlinesSystem,
) -> i32 {
    if out.is_null() {
        return MINLINES_ERR_ARGUMENT;
    }
    let ty = match read_str(type_str) {
        Ok(s) => s,
        Err(code) => return code,
    };
    match RootSystem::parse(ty) {
        Ok(sys) => {
            *out = Box::into_raw(Box::new(MinlinesSystem { inner: sys }));
            MINLINES_OK
        }
        Err(err) => code_for(&err),
    }
}

/// Release a handle from `minlines_system_new`. Null is ignored.
///
/// # Safety
/// `sys` must be a pointer previously returned by `minlines_system_new`,
/// released at most once.
#[no_mangle]
pub unsafe extern "C" fn minlines_system_free(sys: *mut MinlinesSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Rank of the system, or -1 for a null handle.
///
/// # Safety
/// `sys` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn minlines_system_rank(sys: *const MinlinesSystem) -> i64 {
    match sys.as_ref() {
        Some(s) => s.inner.rank() as i64,
        None => -1,
    }
}

/// Number of positive roots, or -1 for a null handle.
///
/// # Safety
/// `sys` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn minlines_system_positive_roots(sys: *const MinlinesSystem) -> i64 {
    match sys.as_ref() {
        Some(s) => s.inner.num_positive_roots() as i64,
        None => -1,
    }
}

/// Run a named operation with JSON arguments; on success `*out_json` holds a
/// JSON document. Operation names match the CLI subcommands ("root-system",
/// "weyl", "curves", "lines", "smooth", "bs", "quiver", "decompose",
/// "check5", "families", plus "gamma" and "schubert-families"); arguments use
/// the same 1-based string conventions as the CLI flags, e.g.
/// `{"type": "A3", "levi": "1,3", "word": "1 3 2"}`.
///
/// # Safety
/// `op` and `args_json` must be NUL-terminated; `out_json` must be a valid
/// pointer. The returned string must be freed with `minlines_string_free`.
#[no_mangle]
pub unsafe extern "C" fn minlines_run(
    op: *const c_char,
    args_json: *const c_char,
    out_json: *mut *mut c_char,
) -> i32 {
    if out_json.is_null() {
        return MINLINES_ERR_ARGUMENT;
    }
    let (op, args) = match (read_str(op), read_str(args_json)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    let args: serde_json::Value = match serde_json::from_str(args) {
        Ok(v) => v,
        Err(_) => return MINLINES_ERR_ARGUMENT,
    };
    match minlines::cli::eval_op(op, &args) {
        Ok(value) => hand_out(value.to_string(), out_json),
        Err(err) => code_for(&err),
    }
}

/// Release a string handed out by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and be released at most once.
#[no_mangle]
pub unsafe extern "C" fn minlines_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
