//! C ABI for clutter-ci.
//!
//! Objects cross the boundary as opaque handles created by `ci_*_new` or
//! `ci_*_from_json` style functions and released with the matching
//! `ci_*_free`. Every fallible function returns a [`CiStatus`]; on failure the
//! message is available from [`ci_last_error`] on the same thread. Strings
//! returned to the caller are released with [`ci_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clutter_ci::classify::classify_with_budget;
use clutter_ci::code::code_parameters_with_budget;
use clutter_ci::json::{parse_paramset, IdealOutput};
use clutter_ci::{enumerate_set, vanishing_ideal, Error, FieldSpec, Form, ParamSet, PointSet, VanishingIdeal};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CiStatus {
    Ok = 0,
    NullPointer = 1,
    /// The input violates a documented precondition.
    InvalidInput = 2,
    BudgetExceeded = 3,
    /// An internal consistency check failed.
    Defect = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CiForm {
    NotCi = 0,
    I = 1,
    Ii = 2,
    Iii = 3,
    Iv = 4,
}

/// Outcome of [`ci_classify`]. `permutation[i]` is the 0-based variable of
/// I(X) playing the role of `t_{i+1}` in the normal form; entries past
/// `nvars` are unused.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct CiClassification {
    pub is_ci: bool,
    pub form: CiForm,
    /// Divisor of q - 1 for form III, 0 otherwise.
    pub r: u64,
    pub mu_total: usize,
    pub height: usize,
    pub nvars: usize,
    pub permutation: [usize; 4],
}

#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct CiCodeParameters {
    pub degree: u32,
    pub length: usize,
    pub dimension: usize,
    /// False when the codeword sweep exceeded its budget.
    pub has_min_distance: bool,
    pub min_distance: usize,
}

pub struct CiParamSet(ParamSet);

pub struct CiPointSet(PointSet);

pub struct CiIdeal(VanishingIdeal);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CiStatus {
    match e {
        Error::BudgetExceeded { .. } => CiStatus::BudgetExceeded,
        Error::Defect(_) => CiStatus::Defect,
        _ => CiStatus::InvalidInput,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<(), (CiStatus, String)>) -> CiStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CiStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside clutter-ci");
            CiStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (CiStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CiStatus, String) {
    (CiStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (CiStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn ci_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ci_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a parameterization from `s` exponent rows of length `n`, stored
/// row-major in `exponents`, over GF(p^m).
///
/// # Safety
/// `exponents` must point to `s * n` readable values and `out` to writable
/// storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn ci_paramset_new(
    p: u32,
    m: u32,
    n: usize,
    s: usize,
    exponents: *const u32,
    out: *mut *mut CiParamSet,
) -> CiStatus {
    guard(|| {
        if exponents.is_null() {
            return Err(null("exponents"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let len = n.checked_mul(s).ok_or_else(|| lib_err(Error::Malformed("n * s overflows".into())))?;
        let flat = std::slice::from_raw_parts(exponents, len);
        let rows = if n == 0 { Vec::new() } else { flat.chunks(n).map(<[u32]>::to_vec).collect() };
        let field = FieldSpec::new(p, m).map_err(lib_err)?;
        let ps = ParamSet::new(field, n, rows).map_err(lib_err)?;
        *out = boxed(CiParamSet(ps));
        Ok(())
    })
}

/// Parses a parameterization (`monomials`) or clutter (`edges`) document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_paramset_from_json(json: *const c_char, out: *mut *mut CiParamSet) -> CiStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| lib_err(Error::Malformed("input is not UTF-8".into())))?;
        *out = boxed(CiParamSet(parse_paramset(text).map_err(lib_err)?));
        Ok(())
    })
}

/// # Safety
/// `ps` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_paramset_free(ps: *mut CiParamSet) {
    if !ps.is_null() {
        drop(Box::from_raw(ps));
    }
}

/// Number of monomials; 0 for NULL.
///
/// # Safety
/// `ps` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_paramset_s(ps: *const CiParamSet) -> usize {
    ps.as_ref().map_or(0, |p| p.0.s())
}

/// # Safety
/// `ps` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_paramset_is_clutter_type(ps: *const CiParamSet) -> bool {
    ps.as_ref().is_some_and(|p| p.0.is_clutter_type())
}

/// Enumerates X, visiting at most `budget` parameter tuples.
///
/// # Safety
/// `ps` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_enumerate(ps: *const CiParamSet, budget: u64, out: *mut *mut CiPointSet) -> CiStatus {
    guard(|| {
        let ps = deref(ps, "paramset")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = boxed(CiPointSet(enumerate_set(&ps.0, budget).map_err(lib_err)?));
        Ok(())
    })
}

/// # Safety
/// `x` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_pointset_free(x: *mut CiPointSet) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Number of points; 0 for NULL.
///
/// # Safety
/// `x` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_pointset_len(x: *const CiPointSet) -> usize {
    x.as_ref().map_or(0, |x| x.0.len())
}

/// Number of coordinates per point; 0 for NULL.
///
/// # Safety
/// `x` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_pointset_dim(x: *const CiPointSet) -> usize {
    x.as_ref().map_or(0, |x| x.0.s())
}

/// Writes the canonical coordinates of point `index` as field element
/// indices (sum of c_i p^i over the coefficient vector) into `coords`.
///
/// # Safety
/// `x` must be a live handle and `coords` must hold `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn ci_pointset_coords(x: *const CiPointSet, index: usize, coords: *mut u8, len: usize) -> CiStatus {
    guard(|| {
        let x = deref(x, "pointset")?;
        if coords.is_null() {
            return Err(null("coords"));
        }
        let p = x.0.points().get(index).ok_or_else(|| {
            lib_err(Error::Malformed(format!("point index {index} out of range")))
        })?;
        if len < p.dim() {
            return Err(lib_err(Error::DimensionMismatch { expected: p.dim(), found: len }));
        }
        for (i, c) in p.coords().iter().enumerate() {
            *coords.add(i) = c.0;
        }
        Ok(())
    })
}

/// # Safety
/// `x` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_pointset_monoid_closed(x: *const CiPointSet) -> bool {
    x.as_ref().is_some_and(|x| x.0.monoid_closed())
}

/// Computes the vanishing ideal of a point set.
///
/// # Safety
/// `x` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_vanishing_ideal(x: *const CiPointSet, out: *mut *mut CiIdeal) -> CiStatus {
    guard(|| {
        let x = deref(x, "pointset")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = boxed(CiIdeal(vanishing_ideal(&x.0).map_err(lib_err)?));
        Ok(())
    })
}

/// # Safety
/// `vi` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_free(vi: *mut CiIdeal) {
    if !vi.is_null() {
        drop(Box::from_raw(vi));
    }
}

/// Number of minimal generators; 0 for NULL.
///
/// # Safety
/// `vi` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_mu_total(vi: *const CiIdeal) -> usize {
    vi.as_ref().map_or(0, |v| v.0.mu_total())
}

/// Size of the reduced GRevLex Gröbner basis; 0 for NULL.
///
/// # Safety
/// `vi` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_gb_len(vi: *const CiIdeal) -> usize {
    vi.as_ref().map_or(0, |v| v.0.gb().len())
}

/// # Safety
/// `vi` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_is_binomial(vi: *const CiIdeal) -> bool {
    vi.as_ref().is_some_and(|v| v.0.is_binomial_generated())
}

/// Hilbert function of S/I(X) in degree `d`; 0 for NULL.
///
/// # Safety
/// `vi` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_hilbert(vi: *const CiIdeal, d: u32) -> u64 {
    vi.as_ref().map_or(0, |v| v.0.hilbert(d))
}

/// Points, minimal generators, reduced basis and Hilbert table as JSON.
/// Release the string with [`ci_string_free`].
///
/// # Safety
/// `vi` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_to_json(vi: *const CiIdeal, out: *mut *mut c_char) -> CiStatus {
    guard(|| {
        let vi = deref(vi, "ideal")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let doc = serde_json::to_string(&IdealOutput::new(&vi.0, vi.0.gb()))
            .map_err(|e| (CiStatus::Defect, e.to_string()))?;
        *out = CString::new(doc).map_or(ptr::null_mut(), CString::into_raw);
        Ok(())
    })
}

/// Complete-intersection classification of a clutter-type parameterization.
///
/// # Safety
/// `ps` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_classify(ps: *const CiParamSet, budget: u64, out: *mut CiClassification) -> CiStatus {
    guard(|| {
        let ps = deref(ps, "paramset")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let c = classify_with_budget(&ps.0, budget).map_err(lib_err)?;
        let mut permutation = [0usize; 4];
        for (slot, &v) in permutation.iter_mut().zip(&c.permutation) {
            *slot = v;
        }
        *out = CiClassification {
            is_ci: c.is_ci,
            form: match c.form {
                Form::I => CiForm::I,
                Form::II => CiForm::Ii,
                Form::III => CiForm::Iii,
                Form::IV => CiForm::Iv,
                Form::NotCI => CiForm::NotCi,
            },
            r: c.r.unwrap_or(0),
            mu_total: c.mu_total,
            height: c.height,
            nvars: c.permutation.len(),
            permutation,
        };
        Ok(())
    })
}

/// Parameters of the degree-`d` evaluation code on the points of `vi`,
/// sweeping at most `budget` coefficient vectors for the minimum distance.
///
/// # Safety
/// `vi` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_code_parameters(
    vi: *const CiIdeal,
    d: u32,
    budget: u64,
    out: *mut CiCodeParameters,
) -> CiStatus {
    guard(|| {
        let vi = deref(vi, "ideal")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let c = code_parameters_with_budget(vi.0.source(), &vi.0, d, budget).map_err(lib_err)?;
        *out = CiCodeParameters {
            degree: c.degree,
            length: c.length,
            dimension: c.dimension,
            has_min_distance: c.min_distance.is_some(),
            min_distance: c.min_distance.unwrap_or(0),
        };
        Ok(())
    })
}
