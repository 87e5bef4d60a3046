//! C interface to `evoalg`.
//!
//! A problem file (the same JSON the command line tool reads) is parsed
//! into an opaque [`EvoProblem`] handle. Each report function writes a
//! newly allocated JSON string through an out pointer; release it with
//! [`evo_string_free`]. Every function returns an [`EvoStatus`]; on failure
//! [`evo_last_error`] describes the error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use evoalg::algebra::Mode;
use evoalg::cli::{self, ProblemSpec, Report};
use evoalg::{Error, ErrorKind};

/// Result codes. The nonzero input, precondition and invariant codes match
/// the exit codes of the command line tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Precondition = 3,
    Invariant = 4,
    Utf8 = 5,
    Panic = 6,
}

/// How negative inheritance coefficients are treated when parsing.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvoMode {
    /// Use the mode named in the file, strict if absent.
    FromFile = 0,
    Strict = 1,
    Permissive = 2,
}

/// A parsed and validated problem.
pub struct EvoProblem {
    spec: ProblemSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(EvoStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.kind() {
            ErrorKind::Input => EvoStatus::InvalidInput,
            ErrorKind::Precondition => EvoStatus::Precondition,
            ErrorKind::Invariant => EvoStatus::Invariant,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(EvoStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<EvoStatus, Failure>) -> EvoStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            EvoStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(EvoStatus::Utf8, format!("{what}: {e}")))
}

unsafe fn problem<'a>(p: *const EvoProblem) -> Result<&'a EvoProblem, Failure> {
    p.as_ref().ok_or_else(|| null("problem"))
}

/// Writes the report body through `out`. A report that records invariant
/// breaches is still written, and the status is `Invariant`.
unsafe fn emit(report: Report, out: *mut *mut c_char) -> Result<EvoStatus, Failure> {
    let json = serde_json::to_string(&report.body).expect("serializable");
    *out = CString::new(json).expect("JSON has no nul").into_raw();
    if report.breaches > 0 {
        set_error(format!("{} internal invariant breach(es) recorded in the report", report.breaches));
        return Ok(EvoStatus::Invariant);
    }
    Ok(EvoStatus::Ok)
}

unsafe fn with_report(
    p: *const EvoProblem,
    out: *mut *mut c_char,
    f: impl FnOnce(&ProblemSpec) -> Result<Report, Failure>,
) -> EvoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let report = f(&problem(p)?.spec)?;
        emit(report, out)
    })
}

/// Parses a problem from a JSON document. `mode` is an [`EvoMode`] value;
/// anything else is rejected with `InvalidInput`.
///
/// # Safety
/// `json` must be a valid nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evo_problem_from_json(
    json: *const c_char,
    mode: c_int,
    out: *mut *mut EvoProblem,
) -> EvoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let mode = match mode {
            m if m == EvoMode::FromFile as c_int => None,
            m if m == EvoMode::Strict as c_int => Some(Mode::Strict),
            m if m == EvoMode::Permissive as c_int => Some(Mode::Permissive),
            other => return Err(Failure(EvoStatus::InvalidInput, format!("unknown mode {other}"))),
        };
        let spec = cli::parse_str(text(json, "json")?, mode)?;
        *out = Box::into_raw(Box::new(EvoProblem { spec }));
        Ok(EvoStatus::Ok)
    })
}

/// Releases a problem. Null is ignored.
///
/// # Safety
/// `p` must come from [`evo_problem_from_json`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn evo_problem_free(p: *mut EvoProblem) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Dimension of the algebra.
///
/// # Safety
/// `p` must be a live handle and `dim` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evo_problem_dim(p: *const EvoProblem, dim: *mut usize) -> EvoStatus {
    guard(|| {
        let p = problem(p)?;
        let dim = dim.as_mut().ok_or_else(|| null("dim"))?;
        *dim = p.spec.algebra.dim();
        Ok(EvoStatus::Ok)
    })
}

/// Numbers of female and male types. `Precondition` for an algebra given
/// by structure constants.
///
/// # Safety
/// `p` must be a live handle; `n` and `nu` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn evo_problem_types(p: *const EvoProblem, n: *mut usize, nu: *mut usize) -> EvoStatus {
    guard(|| {
        let p = problem(p)?;
        let (n, nu) = (n.as_mut().ok_or_else(|| null("n"))?, nu.as_mut().ok_or_else(|| null("nu"))?);
        let t = p.spec.algebra.tensor().ok_or(Error::NotEabp)?;
        *n = t.n();
        *nu = t.nu();
        Ok(EvoStatus::Ok)
    })
}

/// Full analysis report.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evo_analyze(p: *const EvoProblem, out: *mut *mut c_char) -> EvoStatus {
    with_report(p, out, |spec| Ok(cli::run_analyze(spec)))
}

/// Invariant forms, annihilator and disappearing forms.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evo_forms(p: *const EvoProblem, out: *mut *mut c_char) -> EvoStatus {
    with_report(p, out, |spec| Ok(cli::run_forms(spec)))
}

/// Trajectory of a named state.
///
/// # Safety
/// `p` must be a live handle, `state` a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evo_simulate(
    p: *const EvoProblem,
    state: *const c_char,
    steps: usize,
    decimal: bool,
    out: *mut *mut c_char,
) -> EvoStatus {
    with_report(p, out, |spec| Ok(cli::run_simulate(spec, text(state, "state")?, steps, decimal)?))
}

/// Classification of `(X, Y)` and the named pairs; `pair` may be null for all.
///
/// # Safety
/// `p` must be a live handle, `pair` null or a nul-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evo_bq_classify(
    p: *const EvoProblem,
    pair: *const c_char,
    out: *mut *mut c_char,
) -> EvoStatus {
    with_report(p, out, |spec| {
        let pair = if pair.is_null() { None } else { Some(text(pair, "pair")?) };
        Ok(cli::run_bq_classify(spec, pair)?)
    })
}

/// Homomorphism check of a named map.
///
/// # Safety
/// `p` must be a live handle, `map` a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evo_check_hom(p: *const EvoProblem, map: *const c_char, out: *mut *mut c_char) -> EvoStatus {
    with_report(p, out, |spec| Ok(cli::run_check_hom(spec, text(map, "map")?)?))
}

/// Classification of the quotient by a named ideal of codimension 2.
///
/// # Safety
/// `p` must be a live handle, `ideal` a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn evo_classify_quotient(
    p: *const EvoProblem,
    ideal: *const c_char,
    out: *mut *mut c_char,
) -> EvoStatus {
    with_report(p, out, |spec| Ok(cli::run_classify_quotient(spec, text(ideal, "ideal")?)?))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn evo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn evo_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn evo_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
