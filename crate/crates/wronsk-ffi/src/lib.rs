//! C ABI for the wronsk library: opaque handles, status codes, and UTF-8
//! strings in the canonical expression syntax. The header is generated by
//! cbindgen into `include/wronsk.h` at build time.
//!
//! Conventions: every fallible function returns a `WronskStatus`;
//! out-parameters are written only on `Ok`. Strings returned through
//! out-parameters are owned by the caller and must be released with
//! `wronsk_string_free`; handles with the matching `*_free`. On any
//! non-`Ok` status a human-readable message is available from
//! `wronsk_last_error_message` until the next failing call on the same
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use wronsk::characterize::{characterize_laurent, characterize_poly};
use wronsk::error::Error as WronskError;
use wronsk::laurent::LaurentPoly;
use wronsk::parser::{parse_laurent, parse_rational};
use wronsk::ratfun::{check_n2_impossibility, wronskian_rational, RationalFunction};
use wronsk::search::{conjecture_search, SearchConfig};
use wronsk::wronskian::{classify, WronskianClass};

/// Opaque handle to a Laurent polynomial over Q.
pub struct WronskPoly(LaurentPoly);

/// Opaque handle to a rational function over Q with a factored denominator.
pub struct WronskRational(RationalFunction);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WronskStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    MathError = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WronskClassTag {
    IdenticallyZero = 0,
    NonzeroConstant = 1,
    NonConstant = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: impl Into<Vec<u8>>) {
    let c = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Message for the most recent error on this thread. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn wronsk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn wronsk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

unsafe fn read_utf8<'a>(text: *const c_char) -> Result<&'a str, WronskStatus> {
    if text.is_null() {
        set_last_error("null text argument");
        return Err(WronskStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_last_error("text is not valid UTF-8");
        WronskStatus::InvalidUtf8
    })
}

unsafe fn collect_polys(
    polys: *const *const WronskPoly,
    len: usize,
) -> Result<Vec<LaurentPoly>, WronskStatus> {
    if polys.is_null() {
        set_last_error("null family pointer");
        return Err(WronskStatus::NullArgument);
    }
    let slice = std::slice::from_raw_parts(polys, len);
    let mut out = Vec::with_capacity(len);
    for p in slice {
        if p.is_null() {
            set_last_error("null polynomial handle in family");
            return Err(WronskStatus::NullArgument);
        }
        out.push((**p).0.clone());
    }
    if out.is_empty() {
        set_last_error("the family must not be empty");
        return Err(WronskStatus::NullArgument);
    }
    Ok(out)
}

fn give_string(s: String, out: *mut *mut c_char) -> WronskStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            WronskStatus::Ok
        }
        Err(_) => {
            set_last_error("output contained an interior NUL byte");
            WronskStatus::MathError
        }
    }
}

/// Parses a Laurent polynomial expression.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wronsk_poly_parse(
    text: *const c_char,
    out: *mut *mut WronskPoly,
) -> WronskStatus {
    if out.is_null() {
        set_last_error("null out pointer");
        return WronskStatus::NullArgument;
    }
    let text = match read_utf8(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match parse_laurent(text) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(WronskPoly(p)));
            WronskStatus::Ok
        }
        Err(e) => {
            set_last_error(e.to_string());
            WronskStatus::ParseError
        }
    }
}

/// Renders a polynomial in the canonical text form.
///
/// # Safety
/// `poly` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wronsk_poly_render(
    poly: *const WronskPoly,
    out: *mut *mut c_char,
) -> WronskStatus {
    if poly.is_null() || out.is_null() {
        set_last_error("null argument");
        return WronskStatus::NullArgument;
    }
    give_string((*poly).0.to_string(), out)
}

/// # Safety
/// `poly` must be a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wronsk_poly_free(poly: *mut WronskPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Exact Wronskian determinant of `len` polynomials.
///
/// # Safety
/// `polys` must point to `len` live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wronsk_wronskian(
    polys: *const *const WronskPoly,
    len: usize,
    out: *mut *mut WronskPoly,
) -> WronskStatus {
    if out.is_null() {
        set_last_error("null out pointer");
        return WronskStatus::NullArgument;
    }
    let family = match collect_polys(polys, len) {
        Ok(f) => f,
        Err(status) => return status,
    };
    let w = wronsk::wronskian::wronskian(&family);
    *out = Box::into_raw(Box::new(WronskPoly(w)));
    WronskStatus::Ok
}

/// Classifies the Wronskian of the family. `value_out` receives the exact
/// constant value (caller-owned string) when the class is
/// `NonzeroConstant`, otherwise NULL.
///
/// # Safety
/// `polys` must point to `len` live handles; both out pointers must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn wronsk_classify(
    polys: *const *const WronskPoly,
    len: usize,
    tag_out: *mut WronskClassTag,
    value_out: *mut *mut c_char,
) -> WronskStatus {
    if tag_out.is_null() || value_out.is_null() {
        set_last_error("null out pointer");
        return WronskStatus::NullArgument;
    }
    let family = match collect_polys(polys, len) {
        Ok(f) => f,
        Err(status) => return status,
    };
    let class = classify(&family);
    *value_out = std::ptr::null_mut();
    match class {
        WronskianClass::IdenticallyZero => *tag_out = WronskClassTag::IdenticallyZero,
        WronskianClass::NonzeroConstant(v) => {
            *tag_out = WronskClassTag::NonzeroConstant;
            let status = give_string(v.to_string(), value_out);
            if status != WronskStatus::Ok {
                return status;
            }
        }
        WronskianClass::NonConstant(_) => *tag_out = WronskClassTag::NonConstant,
    }
    WronskStatus::Ok
}

/// Characterization witness as a JSON document with the same schema as the
/// CLI: {"constant": bool, "value": .., "A": .., "r": .., "wronskian": ..}.
/// A non-constant family is reported inside the JSON, not as an error
/// status.
///
/// # Safety
/// `polys` must point to `len` live handles; `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wronsk_characterize_json(
    polys: *const *const WronskPoly,
    len: usize,
    out_json: *mut *mut c_char,
) -> WronskStatus {
    if out_json.is_null() {
        set_last_error("null out pointer");
        return WronskStatus::NullArgument;
    }
    let family = match collect_polys(polys, len) {
        Ok(f) => f,
        Err(status) => return status,
    };
    let all_poly = family.iter().all(LaurentPoly::is_polynomial);
    let witness = if all_poly {
        characterize_poly(&family).map(|ch| {
            let r: Vec<i64> = (0..family.len() as i64).collect();
            (ch.matrix_a, r)
        })
    } else {
        characterize_laurent(&family).map(|ch| (ch.matrix_a, ch.exponents))
    };
    let doc = match witness {
        Ok((matrix_a, r)) => {
            let class = classify(&family);
            let value = class
                .constant_value()
                .expect("witness implies a constant value")
                .to_string();
            serde_json::json!({
                "constant": true,
                "value": value,
                "A": matrix_a.to_string_rows(),
                "r": r,
                "wronskian": class.determinant().to_string(),
            })
        }
        Err(WronskError::NotConstantWronskian(class)) => serde_json::json!({
            "constant": false,
            "value": serde_json::Value::Null,
            "A": serde_json::Value::Null,
            "r": serde_json::Value::Null,
            "wronskian": class.determinant().to_string(),
        }),
        Err(WronskError::LinearlyDependent) => serde_json::json!({
            "constant": false,
            "value": serde_json::Value::Null,
            "A": serde_json::Value::Null,
            "r": serde_json::Value::Null,
            "wronskian": "0",
        }),
        Err(e) => {
            set_last_error(e.to_string());
            return WronskStatus::MathError;
        }
    };
    give_string(doc.to_string(), out_json)
}

/// Parses a rational function (`num / den` with a factored linear
/// denominator, or a plain Laurent expression).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wronsk_rational_parse(
    text: *const c_char,
    out: *mut *mut WronskRational,
) -> WronskStatus {
    if out.is_null() {
        set_last_error("null out pointer");
        return WronskStatus::NullArgument;
    }
    let text = match read_utf8(text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match parse_rational(text) {
        Ok(rf) => {
            *out = Box::into_raw(Box::new(WronskRational(rf)));
            WronskStatus::Ok
        }
        Err(e) => {
            set_last_error(e.to_string());
            WronskStatus::ParseError
        }
    }
}

/// # Safety
/// `rf` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wronsk_rational_render(
    rf: *const WronskRational,
    out: *mut *mut c_char,
) -> WronskStatus {
    if rf.is_null() || out.is_null() {
        set_last_error("null argument");
        return WronskStatus::NullArgument;
    }
    give_string((*rf).0.to_string(), out)
}

/// # Safety
/// `rf` must be a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wronsk_rational_free(rf: *mut WronskRational) {
    if !rf.is_null() {
        drop(Box::from_raw(rf));
    }
}

/// Exact Wronskian of a rational family.
///
/// # Safety
/// `rfs` must point to `len` live handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wronsk_rational_wronskian(
    rfs: *const *const WronskRational,
    len: usize,
    out: *mut *mut WronskRational,
) -> WronskStatus {
    if rfs.is_null() || out.is_null() {
        set_last_error("null argument");
        return WronskStatus::NullArgument;
    }
    let slice = std::slice::from_raw_parts(rfs, len);
    let mut family: Vec<RationalFunction> = Vec::with_capacity(len);
    for p in slice {
        if p.is_null() {
            set_last_error("null rational handle in family");
            return WronskStatus::NullArgument;
        }
        family.push((**p).0.clone());
    }
    if family.is_empty() {
        set_last_error("the family must not be empty");
        return WronskStatus::NullArgument;
    }
    let w = wronskian_rational(&family);
    *out = Box::into_raw(Box::new(WronskRational(w)));
    WronskStatus::Ok
}

/// Two-function impossibility verdict as JSON (the CLI `rational check2`
/// schema).
///
/// # Safety
/// `rf1`, `rf2` must be live handles; `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn wronsk_check2_json(
    rf1: *const WronskRational,
    rf2: *const WronskRational,
    out_json: *mut *mut c_char,
) -> WronskStatus {
    if rf1.is_null() || rf2.is_null() || out_json.is_null() {
        set_last_error("null argument");
        return WronskStatus::NullArgument;
    }
    match check_n2_impossibility(&(*rf1).0, &(*rf2).0) {
        Ok(v) => {
            let doc = serde_json::json!({
                "is_constant": v.is_constant,
                "shift": v.shift.to_string(),
                "beta1": v.beta1.to_string(),
                "k": v.k,
                "l1": v.l1,
                "f": v.f_linear.to_string(),
                "predicted_order_origin": v.predicted_order_origin,
                "predicted_order_beta1": v.predicted_order_beta1,
                "wronskian": v.wronskian.to_string(),
            });
            give_string(doc.to_string(), out_json)
        }
        Err(e) => {
            set_last_error(e.to_string());
            WronskStatus::MathError
        }
    }
}

/// Runs the seeded conjecture search and returns the deterministic JSON
/// report.
///
/// # Safety
/// `out_json` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wronsk_search_json(
    n: usize,
    trials: u64,
    seed: u64,
    degree_bound: u32,
    pole_bound: u32,
    coeff_bound: i64,
    out_json: *mut *mut c_char,
) -> WronskStatus {
    if out_json.is_null() {
        set_last_error("null out pointer");
        return WronskStatus::NullArgument;
    }
    let config = SearchConfig {
        trials,
        degree_bound,
        pole_bound,
        coeff_bound,
    };
    match conjecture_search(n, &config, seed) {
        Ok(report) => give_string(
            serde_json::to_string(&report).expect("report serializes"),
            out_json,
        ),
        Err(e) => {
            set_last_error(e.to_string());
            WronskStatus::MathError
        }
    }
}

/// Releases a string produced by this library.
///
/// # Safety
/// `s` must be a string returned through an out-parameter here, not yet
/// freed; NULL is accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn wronsk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
