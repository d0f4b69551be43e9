//! Exercises the C ABI surface from Rust: status codes, ownership
//! round-trips, and the worked determinant values through opaque handles.

use std::ffi::{CStr, CString};
use std::ptr;

use wronsk_ffi::*;

fn parse(text: &str) -> *mut WronskPoly {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { wronsk_poly_parse(c.as_ptr(), &mut out) };
    assert_eq!(status, WronskStatus::Ok);
    assert!(!out.is_null());
    out
}

fn render(poly: *const WronskPoly) -> String {
    let mut s = ptr::null_mut();
    let status = unsafe { wronsk_poly_render(poly, &mut s) };
    assert_eq!(status, WronskStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { wronsk_string_free(s) };
    text
}

#[test]
fn parse_render_roundtrip() {
    let p = parse("t^2 - 1 + t^-1");
    assert_eq!(render(p), "t^-1 - 1 + t^2");
    unsafe { wronsk_poly_free(p) };
}

#[test]
fn wronskian_through_the_abi() {
    let family = [parse("t^2+t"), parse("2t^2"), parse("t-2")];
    let ptrs: Vec<*const WronskPoly> = family.iter().map(|&p| p as *const _).collect();
    let mut w = ptr::null_mut();
    let status = unsafe { wronsk_wronskian(ptrs.as_ptr(), ptrs.len(), &mut w) };
    assert_eq!(status, WronskStatus::Ok);
    assert_eq!(render(w), "-8");
    unsafe {
        wronsk_poly_free(w);
        for p in family {
            wronsk_poly_free(p);
        }
    }
}

#[test]
fn classify_reports_value() {
    let family = [parse("t^6"), parse("1/t"), parse("1/t^2")];
    let ptrs: Vec<*const WronskPoly> = family.iter().map(|&p| p as *const _).collect();
    let mut tag = WronskClassTag::NonConstant;
    let mut value = ptr::null_mut();
    let status = unsafe { wronsk_classify(ptrs.as_ptr(), ptrs.len(), &mut tag, &mut value) };
    assert_eq!(status, WronskStatus::Ok);
    assert_eq!(tag, WronskClassTag::NonzeroConstant);
    let text = unsafe { CStr::from_ptr(value) }.to_str().unwrap();
    assert_eq!(text, "-56");
    unsafe {
        wronsk_string_free(value);
        for p in family {
            wronsk_poly_free(p);
        }
    }
}

#[test]
fn parse_errors_set_the_message() {
    let c = CString::new("t +").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { wronsk_poly_parse(c.as_ptr(), &mut out) };
    assert_eq!(status, WronskStatus::ParseError);
    let msg = unsafe { CStr::from_ptr(wronsk_last_error_message()) }
        .to_str()
        .unwrap();
    assert!(msg.contains("byte"), "got {:?}", msg);
}

#[test]
fn null_arguments_are_rejected() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { wronsk_poly_parse(ptr::null(), &mut out) },
        WronskStatus::NullArgument
    );
    let p = parse("t");
    let ptrs = [p as *const WronskPoly, ptr::null()];
    let mut w = ptr::null_mut();
    assert_eq!(
        unsafe { wronsk_wronskian(ptrs.as_ptr(), 2, &mut w) },
        WronskStatus::NullArgument
    );
    unsafe { wronsk_poly_free(p) };
    // Frees accept NULL.
    unsafe {
        wronsk_poly_free(ptr::null_mut());
        wronsk_rational_free(ptr::null_mut());
        wronsk_string_free(ptr::null_mut());
    }
}

#[test]
fn rational_check2_verdict() {
    let a = {
        let c = CString::new("1/t").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { wronsk_rational_parse(c.as_ptr(), &mut out) },
            WronskStatus::Ok
        );
        out
    };
    let b = {
        let c = CString::new("1/(t-1)").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(
            unsafe { wronsk_rational_parse(c.as_ptr(), &mut out) },
            WronskStatus::Ok
        );
        out
    };
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { wronsk_check2_json(a, b, &mut json) },
        WronskStatus::Ok
    );
    let doc: serde_json::Value =
        serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    assert_eq!(doc["is_constant"], false);
    assert_eq!(doc["k"], 1);
    assert_eq!(doc["l1"], 1);
    unsafe {
        wronsk_string_free(json);
        wronsk_rational_free(a);
        wronsk_rational_free(b);
    }
}

#[test]
fn characterize_json_schema() {
    let family = [parse("t^2+t"), parse("2t^2"), parse("t-2")];
    let ptrs: Vec<*const WronskPoly> = family.iter().map(|&p| p as *const _).collect();
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { wronsk_characterize_json(ptrs.as_ptr(), ptrs.len(), &mut json) },
        WronskStatus::Ok
    );
    let doc: serde_json::Value =
        serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    assert_eq!(doc["constant"], true);
    assert_eq!(doc["value"], "-8");
    unsafe {
        wronsk_string_free(json);
        for p in family {
            wronsk_poly_free(p);
        }
    }
}

#[test]
fn search_json_is_deterministic() {
    let run = || {
        let mut json = ptr::null_mut();
        assert_eq!(
            unsafe { wronsk_search_json(3, 25, 9, 2, 3, 3, &mut json) },
            WronskStatus::Ok
        );
        let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
        unsafe { wronsk_string_free(json) };
        text
    };
    assert_eq!(run(), run());
}

#[test]
fn version_is_present() {
    let v = unsafe { CStr::from_ptr(wronsk_version()) }.to_str().unwrap();
    assert!(!v.is_empty());
}
