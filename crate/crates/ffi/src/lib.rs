//! C ABI over stresslab. Complexes are opaque handles; results that are not
//! plain counts come back as NUL-terminated JSON strings owned by the caller
//! and released with `sl_string_free`. On failure a function returns a
//! nonzero `SlStatus` and `sl_last_error` describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stresslab::algebra::{artinian_reduction, hochster_betti, koszul_betti, socle_dims, Variant};
use stresslab::builder::Builder;
use stresslab::geom::{EmbeddedComplex, EmbeddedComplexJson};
use stresslab::stress::stress_space;
use stresslab::verify::{verify_claim, Instance, Status};
use stresslab::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    Precondition = 5,
    Computation = 6,
    Internal = 7,
}

/// Ring selector for `sl_betti_json`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlRing {
    R = 0,
    Rbar = 1,
}

/// Outcome of a verified claim.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlClaimStatus {
    Verified = 0,
    Refuted = 1,
    Reported = 2,
}

/// Opaque embedded complex.
pub struct SlComplex {
    builder: Option<Builder>,
    ec: EmbeddedComplex,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn classify(e: &Error) -> SlStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => SlStatus::Parse,
        Error::Precondition(_) | Error::NotASphere(_) | Error::NotPure | Error::NotFullDim(_) => SlStatus::Precondition,
        Error::ReconstructionMismatch | Error::ValidationFailedAfterRetries(_) | Error::CapExceeded { .. } => {
            SlStatus::Computation
        }
        _ => SlStatus::InvalidInput,
    }
}

fn fail(status: SlStatus, msg: String) -> SlStatus {
    set_error(msg);
    status
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), SlStatus>) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SlStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(SlStatus::Internal, "internal panic".into()),
    }
}

fn lib_err(e: Error) -> SlStatus {
    fail(classify(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SlStatus> {
    if p.is_null() {
        return Err(fail(SlStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SlStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a>(p: *const SlComplex) -> Result<&'a SlComplex, SlStatus> {
    p.as_ref().ok_or_else(|| fail(SlStatus::NullArgument, "null complex handle".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), SlStatus> {
    if out.is_null() {
        return Err(fail(SlStatus::NullArgument, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), SlStatus> {
    let c = CString::new(s).map_err(|_| fail(SlStatus::Internal, "output contains NUL".into()))?;
    write_out(out, c.into_raw())
}

/// Message for the most recent failure on this thread, or NULL. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn sl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds an instance from a builder string such as `"cross:d=4"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_from_builder(spec: *const c_char, out: *mut *mut SlComplex) -> SlStatus {
    guard(|| {
        let b: Builder = read_str(spec)?.parse().map_err(lib_err)?;
        let ec = b.build().map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(SlComplex { builder: Some(b), ec })))
    })
}

/// Loads an instance from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_from_json(json: *const c_char, out: *mut *mut SlComplex) -> SlStatus {
    guard(|| {
        let j: EmbeddedComplexJson =
            serde_json::from_str(read_str(json)?).map_err(|e| fail(SlStatus::Parse, e.to_string()))?;
        let ec = EmbeddedComplex::from_json(&j).map_err(lib_err)?;
        write_out(out, Box::into_raw(Box::new(SlComplex { builder: None, ec })))
    })
}

/// JSON form of an instance.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_to_json(c: *const SlComplex, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let s = serde_json::to_string(&handle(c)?.ec.to_json()).map_err(|e| fail(SlStatus::Internal, e.to_string()))?;
        write_string(out, s)
    })
}

/// # Safety
/// `c` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_free(c: *mut SlComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_n_vertices(c: *const SlComplex) -> usize {
    c.as_ref().map_or(0, |c| c.ec.n())
}

/// Ambient dimension `d`, or 0 for NULL.
///
/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_ambient_dim(c: *const SlComplex) -> usize {
    c.as_ref().map_or(0, |c| c.ec.d())
}

/// Dimension of the space of affine stresses of the given degree.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_stress_dim(c: *const SlComplex, degree: usize, out: *mut usize) -> SlStatus {
    guard(|| {
        let dim = stress_space(&handle(c)?.ec, degree).dim();
        write_out(out, dim)
    })
}

/// Betti table as JSON `{"ring": ..., "entries": [[i, j, beta], ...]}`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_betti_json(c: *const SlComplex, ring: SlRing, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let ec = &handle(c)?.ec;
        let table = match ring {
            SlRing::R => hochster_betti(&ec.complex).map_err(lib_err)?,
            SlRing::Rbar => koszul_betti(&artinian_reduction(ec, Variant::ThetaEll).map_err(lib_err)?),
        };
        write_string(out, serde_json::to_string(&table.to_json()).unwrap())
    })
}

/// Socle dimensions `[r_0, r_1, ...]` as JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_socle_json(c: *const SlComplex, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let model = artinian_reduction(&handle(c)?.ec, Variant::ThetaEll).map_err(lib_err)?;
        write_string(out, serde_json::to_string(&socle_dims(&model)).unwrap())
    })
}

/// f-, h-, g- and missing-face vectors as JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_gvector_json(c: *const SlComplex, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let v = handle(c)?.ec.complex.fgm_vectors();
        write_string(out, serde_json::to_string(&v).unwrap())
    })
}

/// Runs one claim on a handle built from a builder string. Writes the
/// certificate JSON to `out` and its outcome to `status`.
///
/// # Safety
/// `claim` must be a NUL-terminated string, `c` a live handle, and both
/// output pointers writable.
#[no_mangle]
pub unsafe extern "C" fn sl_verify(
    claim: *const c_char,
    c: *const SlComplex,
    status: *mut SlClaimStatus,
    out: *mut *mut c_char,
) -> SlStatus {
    guard(|| {
        let claim = read_str(claim)?;
        let h = handle(c)?;
        let builder = h
            .builder
            .clone()
            .ok_or_else(|| fail(SlStatus::Precondition, "certificates need an instance made from a builder string".into()))?;
        let inst = Instance { builder, ec: h.ec.clone() };
        let cert = verify_claim(claim, &inst).map_err(lib_err)?;
        write_out(
            status,
            match cert.status {
                Status::Verified => SlClaimStatus::Verified,
                Status::Refuted => SlClaimStatus::Refuted,
                Status::Reported => SlClaimStatus::Reported,
            },
        )?;
        write_string(out, serde_json::to_string(&cert).unwrap())
    })
}
