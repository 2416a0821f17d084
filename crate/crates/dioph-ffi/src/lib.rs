//! C ABI for the `dioph` library.
//!
//! Conventions:
//! - tuples live behind the opaque handle [`DiophTuple`]; create with
//!   [`dioph_tuple_new`], release with [`dioph_tuple_free`];
//! - every function returns a [`DiophStatus`]; outputs go through out
//!   pointers that are written only on `Ok`;
//! - big integers cross the boundary as decimal strings (counts overflow
//!   64 bits quickly); every `char*` produced here must be released with
//!   [`dioph_string_free`];
//! - on a non-`Ok` status, [`dioph_last_error_message`] returns a
//!   human-readable reason for the calling thread.
//!
//! Panics never unwind across the boundary: they are caught and reported
//! as [`DiophStatus::InternalError`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigUint;

use dioph::denumerant::count_structural;
use dioph::frobenius::frobenius_exact;
use dioph::solvability::decide;
use dioph::tuple::CoprimeTuple;

/// Result of every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiophStatus {
    /// Success; out pointers are filled.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// The coefficients do not form a valid tuple (too short, zero
    /// entry, or not setwise coprime).
    InvalidTuple = 2,
    /// A decimal-string argument did not parse as a non-negative integer.
    ParseError = 3,
    /// The computation exceeded a configured resource limit.
    LimitExceeded = 4,
    /// A panic was caught at the boundary; see the last error message.
    InternalError = 5,
}

/// Opaque handle to a validated coefficient tuple.
pub struct DiophTuple {
    inner: CoprimeTuple,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let message = message.into();
    let c = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error message unavailable").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(status: DiophStatus, message: impl Into<String>) -> DiophStatus {
    set_error(message);
    status
}

fn guarded(body: impl FnOnce() -> DiophStatus) -> DiophStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            fail(
                DiophStatus::InternalError,
                format!("internal panic: {message}"),
            )
        }
    }
}

/// Parses a required decimal-string argument.
unsafe fn parse_decimal(text: *const c_char) -> Result<BigUint, DiophStatus> {
    if text.is_null() {
        return Err(fail(
            DiophStatus::NullArgument,
            "decimal string argument is null",
        ));
    }
    let text = unsafe { CStr::from_ptr(text) };
    let text = text
        .to_str()
        .map_err(|_| fail(DiophStatus::ParseError, "decimal string is not UTF-8"))?;
    text.parse::<BigUint>().map_err(|_| {
        fail(
            DiophStatus::ParseError,
            format!("not a non-negative decimal integer: {text:?}"),
        )
    })
}

fn export_string(value: String, out: *mut *mut c_char) -> DiophStatus {
    let c = match CString::new(value) {
        Ok(c) => c,
        Err(_) => return fail(DiophStatus::InternalError, "output contained a NUL byte"),
    };
    unsafe { *out = c.into_raw() };
    DiophStatus::Ok
}

/// Builds a tuple from `len` coefficients and stores the handle in
/// `*out`. On any failure `*out` is left untouched.
///
/// # Safety
/// `coeffs` must point to `len` readable `uint64_t`s and `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dioph_tuple_new(
    coeffs: *const u64,
    len: usize,
    out: *mut *mut DiophTuple,
) -> DiophStatus {
    guarded(|| {
        if coeffs.is_null() || out.is_null() {
            return fail(DiophStatus::NullArgument, "coeffs and out must be non-null");
        }
        let coeffs = unsafe { std::slice::from_raw_parts(coeffs, len) };
        match CoprimeTuple::new(coeffs.to_vec()) {
            Ok(inner) => {
                unsafe { *out = Box::into_raw(Box::new(DiophTuple { inner })) };
                DiophStatus::Ok
            }
            Err(e) => fail(DiophStatus::InvalidTuple, e.to_string()),
        }
    })
}

/// Releases a handle from [`dioph_tuple_new`]. Null is a no-op.
///
/// # Safety
/// `t` must be null or a handle from [`dioph_tuple_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dioph_tuple_free(t: *mut DiophTuple) {
    if !t.is_null() {
        drop(unsafe { Box::from_raw(t) });
    }
}

/// Exact number of non-negative solutions of `sum(a_i x_i) = b`, written
/// to `*out_count` as a decimal string.
///
/// # Safety
/// `t` must be a live handle; `b_decimal` a NUL-terminated string;
/// `out_count` a valid pointer. The output string must be released with
/// [`dioph_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dioph_count(
    t: *const DiophTuple,
    b_decimal: *const c_char,
    out_count: *mut *mut c_char,
) -> DiophStatus {
    guarded(|| {
        if t.is_null() || out_count.is_null() {
            return fail(
                DiophStatus::NullArgument,
                "tuple and out_count must be non-null",
            );
        }
        let b = match unsafe { parse_decimal(b_decimal) } {
            Ok(b) => b,
            Err(status) => return status,
        };
        let tuple = unsafe { &(*t).inner };
        match count_structural(tuple, &b) {
            Ok(breakdown) => export_string(breakdown.total.to_string(), out_count),
            Err(e) => fail(DiophStatus::LimitExceeded, e.to_string()),
        }
    })
}

/// Whether `sum(a_i x_i) = b` has a non-negative solution.
///
/// # Safety
/// As for [`dioph_count`]; `out_solvable` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dioph_solvable(
    t: *const DiophTuple,
    b_decimal: *const c_char,
    out_solvable: *mut bool,
) -> DiophStatus {
    guarded(|| {
        if t.is_null() || out_solvable.is_null() {
            return fail(
                DiophStatus::NullArgument,
                "tuple and out_solvable must be non-null",
            );
        }
        let b = match unsafe { parse_decimal(b_decimal) } {
            Ok(b) => b,
            Err(status) => return status,
        };
        let tuple = unsafe { &(*t).inner };
        match decide(tuple, &b) {
            Ok(verdict) => {
                unsafe { *out_solvable = verdict.solvable };
                DiophStatus::Ok
            }
            Err(e) => fail(DiophStatus::LimitExceeded, e.to_string()),
        }
    })
}

/// The Frobenius number of the tuple as a decimal string; `"-1"` when
/// every b >= 0 is representable.
///
/// # Safety
/// `t` must be a live handle and `out_value` a valid pointer. The output
/// string must be released with [`dioph_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dioph_frobenius(
    t: *const DiophTuple,
    out_value: *mut *mut c_char,
) -> DiophStatus {
    guarded(|| {
        if t.is_null() || out_value.is_null() {
            return fail(
                DiophStatus::NullArgument,
                "tuple and out_value must be non-null",
            );
        }
        let tuple = unsafe { &(*t).inner };
        match frobenius_exact(tuple) {
            Ok(value) => export_string(value.to_string(), out_value),
            Err(e) => fail(DiophStatus::LimitExceeded, e.to_string()),
        }
    })
}

/// The last error message recorded on this thread, or null when the last
/// call succeeded. The caller owns the returned string.
///
/// # Safety
/// The returned pointer, when non-null, must be released with
/// [`dioph_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dioph_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(message) => message.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Releases a string produced by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string pointer produced by this library, not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn dioph_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
