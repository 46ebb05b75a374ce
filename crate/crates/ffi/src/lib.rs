//! C ABI for the rational-map classifier: opaque map handles, integer
//! status codes, and JSON string outputs matching the CLI schema.
//!
//! Ownership rules: every `*mut OrbiclassMap` returned through an out
//! parameter must be released with `orbiclass_map_free`, every string with
//! `orbiclass_string_free`. All functions tolerate null arguments and report
//! them as `ORBICLASS_ERR_NULL` instead of crashing.

use libc::{c_char, c_int};
use orbiclass::cli::{build_report, parse_map, report_json, PlaceEncoder};
use orbiclass::ratmap::RationalMap;
use serde_json::json;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Opaque handle around a canonical rational map.
pub struct OrbiclassMap(RationalMap);

pub const ORBICLASS_OK: c_int = 0;
/// The expression failed to parse or lower (bad syntax, division by a zero
/// constant, non-integer exponent).
pub const ORBICLASS_ERR_PARSE: c_int = 1;
/// A required pointer argument was null.
pub const ORBICLASS_ERR_NULL: c_int = 2;
/// The input string was not valid UTF-8.
pub const ORBICLASS_ERR_UTF8: c_int = 3;
/// The operation is undefined for this map (e.g. classifying a constant).
pub const ORBICLASS_ERR_UNSUPPORTED: c_int = 4;
/// An internal invariant was violated.
pub const ORBICLASS_ERR_INTERNAL: c_int = 5;

fn guard<F: FnOnce() -> c_int>(f: F) -> c_int {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(ORBICLASS_ERR_INTERNAL)
}

/// Parses a rational-function expression in z into a new map handle.
///
/// # Safety
/// `src` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn orbiclass_map_parse(
    src: *const c_char,
    out: *mut *mut OrbiclassMap,
) -> c_int {
    if src.is_null() || out.is_null() {
        return ORBICLASS_ERR_NULL;
    }
    guard(|| {
        let bytes = unsafe { CStr::from_ptr(src) };
        let Ok(text) = bytes.to_str() else {
            return ORBICLASS_ERR_UTF8;
        };
        match parse_map(text) {
            Ok(m) => {
                unsafe { *out = Box::into_raw(Box::new(OrbiclassMap(m))) };
                ORBICLASS_OK
            }
            Err(_) => ORBICLASS_ERR_PARSE,
        }
    })
}

/// Releases a map handle. Null is a no-op.
///
/// # Safety
/// `map` must be null or a handle obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn orbiclass_map_free(map: *mut OrbiclassMap) {
    if !map.is_null() {
        drop(unsafe { Box::from_raw(map) });
    }
}

/// Degree of the map, or -1 on a null handle.
///
/// # Safety
/// `map` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn orbiclass_map_degree(map: *const OrbiclassMap) -> c_int {
    if map.is_null() {
        return -1;
    }
    unsafe { &*map }.0.degree() as c_int
}

fn string_out(s: String, out: *mut *mut c_char) -> c_int {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            ORBICLASS_OK
        }
        Err(_) => ORBICLASS_ERR_INTERNAL,
    }
}

/// Full classification report as a JSON string (same schema as the CLI).
///
/// # Safety
/// `map` must be a live handle; `out` must be valid to receive the string.
#[no_mangle]
pub unsafe extern "C" fn orbiclass_classify_json(
    map: *const OrbiclassMap,
    out: *mut *mut c_char,
) -> c_int {
    if map.is_null() || out.is_null() {
        return ORBICLASS_ERR_NULL;
    }
    guard(|| {
        let m = unsafe { &*map };
        match build_report(&m.0) {
            Ok(r) => string_out(report_json(&r).to_string(), out),
            Err(_) => ORBICLASS_ERR_UNSUPPORTED,
        }
    })
}

/// Branch data as a JSON string: degree plus partitions over critical values.
///
/// # Safety
/// `map` must be a live handle; `out` must be valid to receive the string.
#[no_mangle]
pub unsafe extern "C" fn orbiclass_passport_json(
    map: *const OrbiclassMap,
    out: *mut *mut c_char,
) -> c_int {
    if map.is_null() || out.is_null() {
        return ORBICLASS_ERR_NULL;
    }
    guard(|| {
        let m = unsafe { &*map };
        let p = m.0.passport();
        let mut enc = PlaceEncoder::default();
        let entries: Vec<serde_json::Value> = p
            .entries
            .iter()
            .map(|e| json!([enc.encode(&e.value), e.partition]))
            .collect();
        string_out(
            json!({"degree": p.degree, "passport": entries}).to_string(),
            out,
        )
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn orbiclass_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
