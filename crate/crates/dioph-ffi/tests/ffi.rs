//! Exercises the C ABI exactly as a foreign caller would: raw pointers,
//! status codes, and manual string release.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use dioph_ffi::{
    dioph_count, dioph_frobenius, dioph_last_error_message, dioph_solvable, dioph_string_free,
    dioph_tuple_free, dioph_tuple_new, DiophStatus, DiophTuple,
};

fn new_tuple(coeffs: &[u64]) -> *mut DiophTuple {
    let mut handle: *mut DiophTuple = ptr::null_mut();
    let status = unsafe { dioph_tuple_new(coeffs.as_ptr(), coeffs.len(), &mut handle) };
    assert_eq!(status, DiophStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn take_string(raw: *mut c_char) -> String {
    assert!(!raw.is_null());
    let value = unsafe { CStr::from_ptr(raw) }.to_str().unwrap().to_string();
    unsafe { dioph_string_free(raw) };
    value
}

fn last_error() -> String {
    take_string(unsafe { dioph_last_error_message() })
}

#[test]
fn full_lifecycle() {
    let t = new_tuple(&[2, 4, 5, 5, 6]);
    let b = CString::new("3").unwrap();

    let mut count: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { dioph_count(t, b.as_ptr(), &mut count) },
        DiophStatus::Ok
    );
    assert_eq!(take_string(count), "0");

    let mut solvable = true;
    assert_eq!(
        unsafe { dioph_solvable(t, b.as_ptr(), &mut solvable) },
        DiophStatus::Ok
    );
    assert!(!solvable);

    let two = CString::new("2").unwrap();
    assert_eq!(
        unsafe { dioph_solvable(t, two.as_ptr(), &mut solvable) },
        DiophStatus::Ok
    );
    assert!(solvable);

    let mut frob: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { dioph_frobenius(t, &mut frob) }, DiophStatus::Ok);
    assert_eq!(take_string(frob), "3");

    unsafe { dioph_tuple_free(t) };
}

#[test]
fn big_integers_cross_as_strings() {
    let t = new_tuple(&[2, 3]);
    let b = CString::new("600000000000000000000000000000").unwrap();
    let mut count: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { dioph_count(t, b.as_ptr(), &mut count) },
        DiophStatus::Ok
    );
    assert_eq!(take_string(count), "100000000000000000000000000001");
    unsafe { dioph_tuple_free(t) };
}

#[test]
fn unit_coefficient_gives_minus_one() {
    let t = new_tuple(&[1, 9]);
    let mut frob: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { dioph_frobenius(t, &mut frob) }, DiophStatus::Ok);
    assert_eq!(take_string(frob), "-1");
    unsafe { dioph_tuple_free(t) };
}

#[test]
fn invalid_tuple_is_reported() {
    let coeffs = [4u64, 6];
    let mut handle: *mut DiophTuple = ptr::null_mut();
    let status = unsafe { dioph_tuple_new(coeffs.as_ptr(), coeffs.len(), &mut handle) };
    assert_eq!(status, DiophStatus::InvalidTuple);
    assert!(handle.is_null(), "out must stay untouched on failure");
    assert!(last_error().contains("not setwise coprime"));

    let short = [7u64];
    let status = unsafe { dioph_tuple_new(short.as_ptr(), short.len(), &mut handle) };
    assert_eq!(status, DiophStatus::InvalidTuple);
}

#[test]
fn null_and_parse_errors() {
    let mut handle: *mut DiophTuple = ptr::null_mut();
    assert_eq!(
        unsafe { dioph_tuple_new(ptr::null(), 0, &mut handle) },
        DiophStatus::NullArgument
    );

    let t = new_tuple(&[2, 3]);
    let mut count: *mut c_char = ptr::null_mut();
    assert_eq!(
        unsafe { dioph_count(t, ptr::null(), &mut count) },
        DiophStatus::NullArgument
    );

    let garbage = CString::new("12x").unwrap();
    assert_eq!(
        unsafe { dioph_count(t, garbage.as_ptr(), &mut count) },
        DiophStatus::ParseError
    );
    assert!(last_error().contains("12x"));

    let negative = CString::new("-4").unwrap();
    assert_eq!(
        unsafe { dioph_count(t, negative.as_ptr(), &mut count) },
        DiophStatus::ParseError
    );

    unsafe { dioph_tuple_free(t) };
    unsafe { dioph_tuple_free(ptr::null_mut()) }; // no-op
    unsafe { dioph_string_free(ptr::null_mut()) }; // no-op
}

#[test]
fn header_is_generated_with_expected_surface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/dioph.h"))
        .expect("build script generates include/dioph.h");
    for needle in [
        "typedef struct DiophTuple DiophTuple;",
        "dioph_tuple_new",
        "dioph_tuple_free",
        "dioph_count",
        "dioph_solvable",
        "dioph_frobenius",
        "dioph_last_error_message",
        "dioph_string_free",
        "DIOPH_STATUS_OK",
    ] {
        assert!(header.contains(needle), "header is missing {needle:?}");
    }
}
