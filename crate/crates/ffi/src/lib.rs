//! C ABI for `tracecurve`.
//!
//! Objects cross the boundary as opaque pointers created by a `*_new`
//! function and released by the matching `*_free`. Every fallible call
//! returns a [`TcStatus`]; on failure the message is kept per thread and can
//! be copied out with [`tc_last_error`]. Field elements are arrays of
//! `tc_field_degree` residues, lowest power of the generator first. Big
//! integers come back as NUL-terminated decimal strings written into
//! caller-provided buffers.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::ptr;
use std::slice;

use num_bigint::BigUint;
use tracecurve::number_theory::{predict, PredictionStatus};
use tracecurve::{CountReport, CurveParams, EnumerationCap, Error, FieldSpec, TraceCurve};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    CapExceeded = 3,
    DivisionByZero = 4,
    /// The output buffer is too small; the required size was still reported.
    BufferTooSmall = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcPredictionStatus {
    Exact = 0,
    ExactOddQOnly = 1,
    Conjectural = 2,
    LowerBound = 3,
    None = 4,
}

impl From<PredictionStatus> for TcPredictionStatus {
    fn from(s: PredictionStatus) -> Self {
        match s {
            PredictionStatus::Exact => TcPredictionStatus::Exact,
            PredictionStatus::ExactOddQOnly => TcPredictionStatus::ExactOddQOnly,
            PredictionStatus::Conjectural => TcPredictionStatus::Conjectural,
            PredictionStatus::LowerBound => TcPredictionStatus::LowerBound,
            PredictionStatus::None => TcPredictionStatus::None,
        }
    }
}

/// An extension field `F_p[z]/(f)`.
pub struct TcField(FieldSpec);

/// A curve together with its ambient field.
pub struct TcCurve(TraceCurve);

/// The outcome of a brute-force count.
pub struct TcReport(CountReport);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn fail(status: TcStatus, msg: impl Into<String>) -> TcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
    status
}

fn from_error(e: Error) -> TcStatus {
    let status = match &e {
        Error::CapExceeded { .. } => TcStatus::CapExceeded,
        Error::DivisionByZero => TcStatus::DivisionByZero,
        Error::NotPrime(_)
        | Error::NotPrimePower(_)
        | Error::BadDegree(_)
        | Error::NotDivisor { .. }
        | Error::InvalidParams(_)
        | Error::AlphaUndefined
        | Error::HypothesisViolated
        | Error::Unsupported(_) => TcStatus::InvalidInput,
        _ => TcStatus::Internal,
    };
    fail(status, e.to_string())
}

/// Copies `s` plus a NUL into `buf`. `*needed` always receives the full
/// size including the NUL.
unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> TcStatus {
    let bytes = s.as_bytes();
    if !needed.is_null() {
        *needed = bytes.len() + 1;
    }
    if buf.is_null() || len < bytes.len() + 1 {
        return fail(TcStatus::BufferTooSmall, format!("need {} bytes", bytes.len() + 1));
    }
    ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, bytes.len());
    *buf.add(bytes.len()) = 0;
    TcStatus::Ok
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(TcStatus::NullPointer, concat!(stringify!($p), " is null"));
        })+
    };
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Copies the calling thread's last error message into `buf`.
///
/// # Safety
/// `buf` must be valid for `len` bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn tc_last_error(buf: *mut c_char, len: usize, needed: *mut usize) -> TcStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    write_str(&msg, buf, len, needed)
}

/// Builds `F_{p^{r·n_total}}`. Fields above the enumeration cap are allowed;
/// the cap applies only to enumeration.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_field_new(p: u64, r: u32, n_total: u32, out: *mut *mut TcField) -> TcStatus {
    non_null!(out);
    match FieldSpec::build(p, r, n_total) {
        Ok(f) => {
            *out = Box::into_raw(Box::new(TcField(f)));
            TcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `field` must come from [`tc_field_new`] (or be null) and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_field_free(field: *mut TcField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Number of residues per element, or 0 for a null field.
///
/// # Safety
/// `field` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn tc_field_degree(field: *const TcField) -> usize {
    field.as_ref().map_or(0, |f| f.0.degree())
}

/// Copies the modulus (degree + 1 coefficients, lowest first) into `out`.
///
/// # Safety
/// `out` must hold `tc_field_degree(field) + 1` values.
#[no_mangle]
pub unsafe extern "C" fn tc_field_modulus(field: *const TcField, out: *mut u64) -> TcStatus {
    non_null!(field, out);
    let m = (*field).0.modulus();
    ptr::copy_nonoverlapping(m.as_ptr(), out, m.len());
    TcStatus::Ok
}

/// Residues must already be canonical, in `[0, p)`.
unsafe fn load(f: &FieldSpec, a: *const u64) -> Result<tracecurve::FieldElement, TcStatus> {
    let coeffs = slice::from_raw_parts(a, f.degree());
    if let Some(c) = coeffs.iter().find(|&&c| c >= f.p()) {
        return Err(fail(TcStatus::InvalidInput, format!("residue {c} not below p = {}", f.p())));
    }
    f.element(coeffs).map_err(from_error)
}

unsafe fn store(f: &FieldSpec, v: &tracecurve::FieldElement, out: *mut u64) {
    ptr::copy_nonoverlapping(v.coeffs().as_ptr(), out, f.degree());
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcOp {
    Add = 0,
    Sub = 1,
    Mul = 2,
    Div = 3,
}

/// `out = a op b`. `out` may alias an input.
///
/// # Safety
/// `a`, `b`, `out` must each hold `tc_field_degree(field)` values.
#[no_mangle]
pub unsafe extern "C" fn tc_field_arith(
    field: *const TcField,
    op: TcOp,
    a: *const u64,
    b: *const u64,
    out: *mut u64,
) -> TcStatus {
    non_null!(field, a, b, out);
    let f = &(*field).0;
    let (x, y) = match (load(f, a), load(f, b)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    let v = match op {
        TcOp::Add => f.add(&x, &y),
        TcOp::Sub => f.sub(&x, &y),
        TcOp::Mul => f.mul(&x, &y),
        TcOp::Div => match f.div(&x, &y) {
            Ok(v) => v,
            Err(e) => return from_error(e),
        },
    };
    store(f, &v, out);
    TcStatus::Ok
}

/// `out = a^{q^e}`.
///
/// # Safety
/// `a`, `out` must each hold `tc_field_degree(field)` values.
#[no_mangle]
pub unsafe extern "C" fn tc_field_frobenius(field: *const TcField, a: *const u64, e: u32, out: *mut u64) -> TcStatus {
    non_null!(field, a, out);
    let f = &(*field).0;
    match load(f, a) {
        Ok(x) => {
            store(f, &f.frobenius(&x, e), out);
            TcStatus::Ok
        }
        Err(s) => s,
    }
}

/// `Tr_{q^m:q^k}(a)`.
///
/// # Safety
/// `a`, `out` must each hold `tc_field_degree(field)` values.
#[no_mangle]
pub unsafe extern "C" fn tc_field_trace(
    field: *const TcField,
    a: *const u64,
    m: u32,
    k: u32,
    out: *mut u64,
) -> TcStatus {
    non_null!(field, a, out);
    let f = &(*field).0;
    match load(f, a).and_then(|x| f.trace_to_base(&x, m, k).map_err(from_error)) {
        Ok(v) => {
            store(f, &v, out);
            TcStatus::Ok
        }
        Err(s) => s,
    }
}

/// Sets `*out` to whether `a` lies in `F_{q^k}`.
///
/// # Safety
/// `a` must hold `tc_field_degree(field)` values.
#[no_mangle]
pub unsafe extern "C" fn tc_field_in_subfield(field: *const TcField, a: *const u64, k: u32, out: *mut bool) -> TcStatus {
    non_null!(field, a, out);
    let f = &(*field).0;
    match load(f, a) {
        Ok(x) => {
            *out = f.in_subfield(&x, k);
            TcStatus::Ok
        }
        Err(s) => s,
    }
}

/// Builds the curve for `q = p^r`. `force` lifts the enumeration cap.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_curve_new(p: u64, r: u32, n: u32, d: u32, force: bool, out: *mut *mut TcCurve) -> TcStatus {
    non_null!(out);
    let cap = EnumerationCap::from_env(force);
    match CurveParams::new(p, r, n, d).and_then(|params| TraceCurve::new(params, &cap)) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(TcCurve(c)));
            TcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `curve` must come from [`tc_curve_new`] (or be null) and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_curve_free(curve: *mut TcCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// Enumerates the field and returns a new report.
///
/// # Safety
/// `curve` must be valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_curve_point_count(curve: *const TcCurve, out: *mut *mut TcReport) -> TcStatus {
    non_null!(curve, out);
    match (*curve).0.point_count() {
        Ok(r) => {
            *out = Box::into_raw(Box::new(TcReport(r)));
            TcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `report` must come from [`tc_curve_point_count`] (or be null) and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tc_report_free(report: *mut TcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of `x` with `R_d(x) ∈ F_q`.
///
/// # Safety
/// `report` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tc_report_special_x(report: *const TcReport, out: *mut u64) -> TcStatus {
    non_null!(report, out);
    match u64::try_from((*report).0.special_x) {
        Ok(v) => {
            *out = v;
            TcStatus::Ok
        }
        Err(_) => fail(TcStatus::Internal, "special x count exceeds 64 bits"),
    }
}

/// Which decimal field of a report to read.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcReportField {
    BruteCount = 0,
    Baseline = 1,
    Bonus = 2,
    /// Empty string when no predictor applies.
    Predicted = 3,
}

/// Writes one big-integer field of the report as decimal.
///
/// # Safety
/// `buf` must be valid for `len` bytes; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn tc_report_decimal(
    report: *const TcReport,
    which: TcReportField,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> TcStatus {
    non_null!(report);
    let r = &(*report).0;
    let s = match which {
        TcReportField::BruteCount => r.brute_count.to_string(),
        TcReportField::Baseline => r.baseline.to_string(),
        TcReportField::Bonus => r.bonus.to_string(),
        TcReportField::Predicted => r.predicted.as_ref().map(|v| v.to_string()).unwrap_or_default(),
    };
    write_str(&s, buf, len, needed)
}

/// `*out` is 1 (agrees), 0 (disagrees) or −1 (no predictor).
///
/// # Safety
/// `report` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tc_report_agrees(report: *const TcReport, out: *mut i32) -> TcStatus {
    non_null!(report, out);
    *out = match (*report).0.agrees {
        Some(true) => 1,
        Some(false) => 0,
        None => -1,
    };
    TcStatus::Ok
}

/// # Safety
/// `report` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn tc_report_status(report: *const TcReport, out: *mut TcPredictionStatus) -> TcStatus {
    non_null!(report, out);
    *out = (*report).0.status().into();
    TcStatus::Ok
}

/// Closed-form prediction for a prime power given in decimal. Writes `G`
/// as decimal into `g_buf`.
///
/// # Safety
/// `q` must be a NUL-terminated string; `g_buf` valid for `g_len` bytes;
/// `status` valid; `needed` may be null.
#[no_mangle]
pub unsafe extern "C" fn tc_predict(
    q: *const c_char,
    n: u32,
    d: u32,
    status: *mut TcPredictionStatus,
    g_buf: *mut c_char,
    g_len: usize,
    needed: *mut usize,
) -> TcStatus {
    non_null!(q, status);
    let Ok(text) = CStr::from_ptr(q).to_str() else {
        return fail(TcStatus::InvalidInput, "q is not UTF-8");
    };
    let Ok(qv) = text.trim().parse::<BigUint>() else {
        return fail(TcStatus::InvalidInput, format!("q = {text:?} is not a decimal integer"));
    };
    match predict(&qv, n, d) {
        Ok(p) => {
            *status = p.status.into();
            write_str(&p.value_g.to_string(), g_buf, g_len, needed)
        }
        Err(e) => from_error(e),
    }
}
