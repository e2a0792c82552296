//! C ABI for `thresh-core`.
//!
//! Every function returns a [`ThreshStatus`]. On failure a one-line reason is
//! available from [`thresh_last_error_message`] on the same thread. Strings
//! returned through `out` parameters are owned by the caller and must be released
//! with [`thresh_string_free`]; sequences with [`thresh_sequence_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use thresh_core::families::{family_pair, verify_family, FamilyId};
use thresh_core::num::parse_positive;
use thresh_core::spectra::{self, characteristic_polynomial, spectral_summary};
use thresh_core::{CreationSequence, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThreshStatus {
    Ok = 0,
    VerificationFailed = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    Disconnected = 5,
    OutOfRange = 6,
    InvalidNumber = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThreshFamily {
    FourBlock = 0,
    SixBlock = 1,
}

/// Opaque handle to a parsed creation sequence.
pub struct ThreshSequence {
    inner: CreationSequence,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ThreshStatus {
    match e {
        Error::Parse { .. } | Error::InvalidBlocks(_) => ThreshStatus::Parse,
        Error::Disconnected => ThreshStatus::Disconnected,
        Error::OutOfRange { .. } => ThreshStatus::OutOfRange,
        Error::InvalidNumber(_) => ThreshStatus::InvalidNumber,
        _ => ThreshStatus::Internal,
    }
}

struct Failure(ThreshStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), format!("{}: {e}", e.kind()))
    }
}

fn guard(f: impl FnOnce() -> Result<ThreshStatus, Failure>) -> ThreshStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            if s == ThreshStatus::Ok {
                set_error("");
            }
            s
        }
        Ok(Err(Failure(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal: panic inside thresh");
            ThreshStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(
        ThreshStatus::NullPointer,
        format!("null-pointer: {what} is NULL"),
    )
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Failure(
            ThreshStatus::InvalidUtf8,
            format!("invalid-utf8: {what} is not UTF-8"),
        )
    })
}

unsafe fn seq<'a>(p: *const ThreshSequence) -> Result<&'a CreationSequence, Failure> {
    p.as_ref().map(|s| &s.inner).ok_or_else(|| null("sequence"))
}

unsafe fn write<T>(out: *mut T, v: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s)
        .map_err(|_| Failure(ThreshStatus::Internal, "internal: NUL in output".into()))?;
    write(out, c.into_raw(), "out")
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure(ThreshStatus::Internal, format!("internal: {e}")))
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn thresh_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Reason for the last failure on this thread (empty after a success).
/// Valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn thresh_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses `"0011100011"`, `"(0^2 1^3 0^3 1^2)"` and similar forms.
///
/// # Safety
/// `text_ptr` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_sequence_parse(
    text_ptr: *const c_char,
    out: *mut *mut ThreshSequence,
) -> ThreshStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s = thresh_core::seq::parse_sequence(text(text_ptr, "text")?)?;
        write(
            out,
            Box::into_raw(Box::new(ThreshSequence { inner: s })),
            "out",
        )?;
        Ok(ThreshStatus::Ok)
    })
}

/// # Safety
/// `s` must come from [`thresh_sequence_parse`] and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn thresh_sequence_free(s: *mut ThreshSequence) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_sequence_order(
    s: *const ThreshSequence,
    out: *mut usize,
) -> ThreshStatus {
    guard(|| {
        write(out, seq(s)?.order(), "out")?;
        Ok(ThreshStatus::Ok)
    })
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_sequence_is_connected(
    s: *const ThreshSequence,
    out: *mut bool,
) -> ThreshStatus {
    guard(|| {
        write(out, seq(s)?.is_connected(), "out")?;
        Ok(ThreshStatus::Ok)
    })
}

/// Compact block form, e.g. `"(0^2 1^3 0^3 1^2)"`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_sequence_to_string(
    s: *const ThreshSequence,
    out: *mut *mut c_char,
) -> ThreshStatus {
    guard(|| {
        write_string(out, seq(s)?.to_string())?;
        Ok(ThreshStatus::Ok)
    })
}

/// Multiplicities of the eigenvalues 0 and -1 of a connected graph.
///
/// # Safety
/// `s` must be a live handle; `m0` and `m_minus1` must be writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_multiplicities(
    s: *const ThreshSequence,
    m0: *mut usize,
    m_minus1: *mut usize,
) -> ThreshStatus {
    guard(|| {
        let b = seq(s)?.to_blocks();
        let a = spectra::multiplicity_zero(&b)?;
        let c = spectra::multiplicity_minus_one(&b)?;
        write(m0, a, "m0")?;
        write(m_minus1, c, "m_minus1")?;
        Ok(ThreshStatus::Ok)
    })
}

/// Characteristic polynomial as a JSON array of integers, constant term first.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_char_poly_json(
    s: *const ThreshSequence,
    out: *mut *mut c_char,
) -> ThreshStatus {
    guard(|| {
        let p = characteristic_polynomial(seq(s)?);
        write_string(out, json(&p)?)?;
        Ok(ThreshStatus::Ok)
    })
}

/// Full spectral summary of a connected graph as a JSON object.
///
/// # Safety
/// `s` must be a live handle; `precision` NUL-terminated (e.g. `"1e-10"`); `out` writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_spectral_summary_json(
    s: *const ThreshSequence,
    precision: *const c_char,
    out: *mut *mut c_char,
) -> ThreshStatus {
    guard(|| {
        let p = parse_positive(text(precision, "precision")?)?;
        let summary = spectral_summary(seq(s)?, &p)?;
        write_string(out, json(&summary)?)?;
        Ok(ThreshStatus::Ok)
    })
}

/// Energy interval `{"lo": "...", "hi": "..."}` with outward-rounded decimal endpoints.
///
/// # Safety
/// `s` must be a live handle; `precision` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_energy_json(
    s: *const ThreshSequence,
    precision: *const c_char,
    out: *mut *mut c_char,
) -> ThreshStatus {
    guard(|| {
        let p = parse_positive(text(precision, "precision")?)?;
        let e = spectra::energy(seq(s)?, &p)?;
        write_string(out, json(&e)?)?;
        Ok(ThreshStatus::Ok)
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_is_cospectral(
    a: *const ThreshSequence,
    b: *const ThreshSequence,
    out: *mut bool,
) -> ThreshStatus {
    guard(|| {
        write(out, spectra::is_cospectral(seq(a)?, seq(b)?), "out")?;
        Ok(ThreshStatus::Ok)
    })
}

/// Verification report for one family pair. The JSON is written even when a
/// check fails; the status is then `VERIFICATION_FAILED`.
///
/// # Safety
/// `tol` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_family_verify_json(
    family: ThreshFamily,
    i: u64,
    tol: *const c_char,
    out: *mut *mut c_char,
) -> ThreshStatus {
    guard(|| {
        let f = match family {
            ThreshFamily::FourBlock => FamilyId::FourBlock,
            ThreshFamily::SixBlock => FamilyId::SixBlock,
        };
        let t = parse_positive(text(tol, "tol")?)?;
        family_pair(f, i)?;
        let report = verify_family(f, i, &t)?;
        write_string(out, json(&report)?)?;
        if report.passed() {
            Ok(ThreshStatus::Ok)
        } else {
            Err(Failure(
                ThreshStatus::VerificationFailed,
                "verification: a family check failed".into(),
            ))
        }
    })
}

/// Equienergetic search over all connected threshold graphs of order `n`.
///
/// # Safety
/// `precision` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn thresh_hunt_json(
    n: usize,
    precision: *const c_char,
    out: *mut *mut c_char,
) -> ThreshStatus {
    guard(|| {
        let p = parse_positive(text(precision, "precision")?)?;
        let mut result = thresh_core::hunt::find_equienergetic_pairs(n, &p)?;
        result.stats.elapsed_ms = None;
        write_string(out, json(&result)?)?;
        Ok(ThreshStatus::Ok)
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn thresh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
