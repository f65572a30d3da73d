use std::ffi::{CStr, CString};
use std::ptr;

use stresslab_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { sl_string_free(p) };
    s
}

fn build(spec: &str) -> *mut SlComplex {
    let spec = CString::new(spec).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { sl_complex_from_builder(spec.as_ptr(), &mut h) }, SlStatus::Ok);
    h
}

#[test]
fn stress_and_tables() {
    let h = build("cross:d=4");
    unsafe {
        assert_eq!(sl_complex_n_vertices(h), 8);
        assert_eq!(sl_complex_ambient_dim(h), 4);
        let mut dim = 0;
        assert_eq!(sl_stress_dim(h, 2, &mut dim), SlStatus::Ok);
        assert_eq!(dim, 2);

        let mut out = ptr::null_mut();
        assert_eq!(sl_socle_json(h, &mut out), SlStatus::Ok);
        assert_eq!(take_string(out), "[0,0,2]");

        assert_eq!(sl_betti_json(h, SlRing::Rbar, &mut out), SlStatus::Ok);
        let table: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(table["ring"], "Rbar");
        assert!(table["entries"].as_array().unwrap().contains(&serde_json::json!([1, 2, 4])));

        assert_eq!(sl_gvector_json(h, &mut out), SlStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["g"], serde_json::json!([1, 3, 2]));
        sl_complex_free(h);
    }
}

#[test]
fn json_round_trip_and_verify() {
    let h = build("cyclic:d=5,n=8");
    unsafe {
        let mut text = ptr::null_mut();
        assert_eq!(sl_complex_to_json(h, &mut text), SlStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(sl_complex_from_json(text, &mut back), SlStatus::Ok);
        sl_string_free(text);
        assert_eq!(sl_complex_n_vertices(back), 8);

        let claim = CString::new("Thm3.1").unwrap();
        let mut status = SlClaimStatus::Refuted;
        let mut out = ptr::null_mut();
        assert_eq!(sl_verify(claim.as_ptr(), h, &mut status, &mut out), SlStatus::Ok);
        assert_eq!(status, SlClaimStatus::Verified);
        assert!(take_string(out).contains("\"claim_id\":\"Thm3.1\""));

        // a JSON-loaded handle has no builder string to cite
        assert_eq!(sl_verify(claim.as_ptr(), back, &mut status, &mut out), SlStatus::Precondition);
        sl_complex_free(back);
        sl_complex_free(h);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut h = ptr::null_mut();
        let bad = CString::new("cube:d=3").unwrap();
        assert_eq!(sl_complex_from_builder(bad.as_ptr(), &mut h), SlStatus::Parse);
        assert!(h.is_null());
        let msg = CStr::from_ptr(sl_last_error()).to_str().unwrap();
        assert!(msg.contains("cube"));
        assert_eq!(sl_complex_from_builder(ptr::null(), &mut h), SlStatus::NullArgument);
        let mut dim = 0;
        assert_eq!(sl_stress_dim(ptr::null(), 1, &mut dim), SlStatus::NullArgument);
        sl_complex_free(ptr::null_mut());
        sl_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_current() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/stresslab.h")).unwrap();
    for name in ["sl_complex_from_builder", "sl_stress_dim", "sl_betti_json", "sl_verify", "sl_last_error", "typedef struct SlComplex SlComplex"] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(status) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include/stresslab.h"))
        .status()
    else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(status.success());
}
