//! C ABI over `walg`.
//!
//! Conventions:
//! - every fallible function returns a [`WalgStatus`] and writes its result
//!   through an out-pointer;
//! - rationals cross the boundary as NUL-terminated strings `"p/q"` or `"n"`;
//! - strings returned by the library are owned by the caller and released
//!   with [`walg_string_free`];
//! - after a non-OK status, [`walg_last_error_message`] describes the failure
//!   on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use walg::algebra::rootdata::RootDataSource;
use walg::algebra::{build_algebra_with, AlgebraData, AlgebraId};
use walg::catalog::{CatalogFile, RecordKind};
use walg::classify::{
    hamiltonian_reduce, unitarity_verdict, AffineModuleLabel, Condition, DominantWeight, Ell0,
    Level, Verdict, WModuleLabel,
};
use walg::{Error, Rational};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidAlgebra = 3,
    InvalidNumber = 4,
    InvalidWeight = 5,
    CriticalLevel = 6,
    OutOfRange = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalgVerdict {
    Unitary = 0,
    NotUnitary1a = 1,
    NotUnitary1b = 2,
    NotUnitary1c = 3,
    Open = 4,
}

/// Bit flags selecting the records of [`walg_classify_json`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalgRecordKinds {
    W = 1,
    Affine = 2,
}

/// Opaque handle to a built algebra.
pub struct WalgAlgebra {
    data: AlgebraData,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> WalgStatus {
    match e {
        Error::InvalidAlgebra(_) => WalgStatus::InvalidAlgebra,
        Error::ParseRational(_) | Error::DivisionByZero => WalgStatus::InvalidNumber,
        Error::NotInPk(_) | Error::DimensionMismatch { .. } => WalgStatus::InvalidWeight,
        Error::CriticalLevel(_) => WalgStatus::CriticalLevel,
        Error::OutOfRange { .. } => WalgStatus::OutOfRange,
        _ => WalgStatus::Internal,
    }
}

struct Fail(WalgStatus);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        set_error(e.to_string());
        Fail(status_of(&e))
    }
}

fn fail(status: WalgStatus, msg: &str) -> Fail {
    set_error(msg.to_string());
    Fail(status)
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> WalgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WalgStatus::Ok,
        Ok(Err(Fail(s))) => s,
        Err(_) => {
            set_error("internal panic".into());
            WalgStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(fail(WalgStatus::NullPointer, &format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(WalgStatus::InvalidUtf8, &format!("{what} is not UTF-8")))
}

unsafe fn rational_arg(p: *const c_char, what: &str) -> Result<Rational, Fail> {
    Ok(str_arg(p, what)?.parse::<Rational>()?)
}

unsafe fn alg_arg<'a>(p: *const WalgAlgebra) -> Result<&'a AlgebraData, Fail> {
    p.as_ref()
        .map(|a| &a.data)
        .ok_or_else(|| fail(WalgStatus::NullPointer, "algebra handle is NULL"))
}

unsafe fn coeffs_arg(p: *const u32, len: usize) -> Result<Vec<u32>, Fail> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(fail(WalgStatus::NullPointer, "nu is NULL"));
    }
    Ok(std::slice::from_raw_parts(p, len).to_vec())
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| fail(WalgStatus::NullPointer, "output pointer is NULL"))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no NUL bytes").into_raw()
}

/// Builds the algebra named `name` (`psl2-2`, `spo2-<m>`, `d21-<m>-<n>`, `f4`, `g3`).
/// Honors `WALG_DATA_DIR`. Free the handle with [`walg_algebra_free`].
///
/// # Safety
/// `name` must be NULL or a valid C string; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn walg_algebra_new(
    name: *const c_char,
    out: *mut *mut WalgAlgebra,
) -> WalgStatus {
    guard(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let id: AlgebraId = str_arg(name, "name")?.parse()?;
        let data = build_algebra_with(id, &RootDataSource::from_env())?;
        *out = Box::into_raw(Box::new(WalgAlgebra { data }));
        Ok(())
    })
}

/// # Safety
/// `alg` must be NULL or a handle from [`walg_algebra_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn walg_algebra_free(alg: *mut WalgAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Root data and derived constants as JSON.
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn walg_algebra_info_json(
    alg: *const WalgAlgebra,
    out: *mut *mut c_char,
) -> WalgStatus {
    guard(|| {
        let data = alg_arg(alg)?;
        let out = out_ptr(out)?;
        let json =
            serde_json::to_string(data).map_err(|e| fail(WalgStatus::Internal, &e.to_string()))?;
        *out = to_c(json);
        Ok(())
    })
}

/// Whether `k` lies in the unitarity range.
///
/// # Safety
/// `alg` must be a live handle; `k` a C string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn walg_in_range(
    alg: *const WalgAlgebra,
    k: *const c_char,
    out: *mut bool,
) -> WalgStatus {
    guard(|| {
        let data = alg_arg(alg)?;
        let level = Level::new(data, rational_arg(k, "k")?)?;
        *out_ptr(out)? = level.in_unitarity_range();
        Ok(())
    })
}

/// Classification catalog at level `k` as JSON; `kinds` is a bitwise OR of
/// [`WalgRecordKinds`] values (0 means W only).
///
/// # Safety
/// `alg` must be a live handle; `k` a C string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn walg_classify_json(
    alg: *const WalgAlgebra,
    k: *const c_char,
    kinds: u32,
    out: *mut *mut c_char,
) -> WalgStatus {
    guard(|| {
        let data = alg_arg(alg)?;
        let k = rational_arg(k, "k")?;
        let out = out_ptr(out)?;
        let mut list = Vec::new();
        if kinds == 0 || kinds & WalgRecordKinds::W as u32 != 0 {
            list.push(RecordKind::W);
        }
        if kinds & WalgRecordKinds::Affine as u32 != 0 {
            list.push(RecordKind::Affine);
        }
        *out = to_c(CatalogFile::build(data, k, &list, None)?.to_json());
        Ok(())
    })
}

/// Unitarity verdict for L^W(ν, ℓ₀), ν given by `nu_len` coefficients over
/// the fundamental weights of g^♮.
///
/// # Safety
/// `alg` must be a live handle; `k`, `ell0` C strings; `nu` readable for
/// `nu_len` elements; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn walg_verdict(
    alg: *const WalgAlgebra,
    k: *const c_char,
    nu: *const u32,
    nu_len: usize,
    ell0: *const c_char,
    out: *mut WalgVerdict,
) -> WalgStatus {
    guard(|| {
        let data = alg_arg(alg)?;
        let level = Level::new(data, rational_arg(k, "k")?)?;
        let nu = DominantWeight::new(data, coeffs_arg(nu, nu_len)?)?;
        let label = WModuleLabel {
            nu,
            ell0: Ell0::Value(rational_arg(ell0, "ell0")?),
        };
        *out_ptr(out)? = match unitarity_verdict(&level, &label)? {
            Verdict::Unitary => WalgVerdict::Unitary,
            Verdict::NotUnitary(Condition::C1a) => WalgVerdict::NotUnitary1a,
            Verdict::NotUnitary(Condition::C1b) => WalgVerdict::NotUnitary1b,
            Verdict::NotUnitary(Condition::C1c) => WalgVerdict::NotUnitary1c,
            Verdict::OpenConjecture => WalgVerdict::Open,
        };
        Ok(())
    })
}

/// H₀(L(kΛ₀ + hθ + ν)) as JSON: `{"result":"zero"}` or
/// `{"result":{"nu_coeffs":[..],"ell0":"p/q"}}`.
///
/// # Safety
/// As for [`walg_verdict`], with `h` in place of `ell0`.
#[no_mangle]
pub unsafe extern "C" fn walg_reduce_json(
    alg: *const WalgAlgebra,
    k: *const c_char,
    nu: *const u32,
    nu_len: usize,
    h: *const c_char,
    out: *mut *mut c_char,
) -> WalgStatus {
    guard(|| {
        let data = alg_arg(alg)?;
        let level = Level::new(data, rational_arg(k, "k")?)?;
        let nu = DominantWeight::new(data, coeffs_arg(nu, nu_len)?)?;
        let label = AffineModuleLabel {
            nu,
            h: rational_arg(h, "h")?,
        };
        let out = out_ptr(out)?;
        let result = match hamiltonian_reduce(&level, &label) {
            None => serde_json::json!("zero"),
            Some(w) => serde_json::json!({"nu_coeffs": w.nu.coeffs(), "ell0": w.ell0}),
        };
        *out = to_c(serde_json::json!({ "result": result }).to_string());
        Ok(())
    })
}

/// Ledger report at level `k` as JSON; `all_pass` receives whether every check passed.
///
/// # Safety
/// `alg` must be a live handle; `k` a C string; `out` and `all_pass` writable.
#[no_mangle]
pub unsafe extern "C" fn walg_ledger_json(
    alg: *const WalgAlgebra,
    k: *const c_char,
    out: *mut *mut c_char,
    all_pass: *mut bool,
) -> WalgStatus {
    guard(|| {
        let data = alg_arg(alg)?;
        let k = rational_arg(k, "k")?;
        let out = out_ptr(out)?;
        let all_pass = out_ptr(all_pass)?;
        let rep = walg::ledger::run_all(data, &[k])?;
        *all_pass = rep.all_pass();
        *out = to_c(
            serde_json::to_string(&rep).map_err(|e| fail(WalgStatus::Internal, &e.to_string()))?,
        );
        Ok(())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn walg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or NULL. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn walg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
