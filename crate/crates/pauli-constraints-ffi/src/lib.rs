//! C ABI over `pauli-constraints`.
//!
//! Every function returns a [`PcStatus`]. Results come back through out
//! parameters; objects are opaque handles released with their `_free`
//! function, strings with [`pc_string_free`]. After a failure,
//! [`pc_last_error`] describes it on the calling thread.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pauli_constraints::coefficients::{coefficient, TestSpectrum};
use pauli_constraints::combinatorics::Partition;
use pauli_constraints::generators::{grassmann_kind1, grassmann_kind2, GeneratorError, InequalityFamily};
use pauli_constraints::permutations::Permutation;
use pauli_constraints::polyring::{schubert, SparsePoly};
use pauli_constraints::polytope::{pipeline, PipelineReport, PolytopeError, System};
use pauli_constraints::states::{occupation_numbers, WedgeState};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BufferTooSmall = 3,
    ResourceCap = 4,
    Panic = 5,
}

/// A Schubert or other integer polynomial.
pub struct PcPoly(SparsePoly);
/// A fermionic state in `∧^N H_r`.
pub struct PcState(WedgeState);
/// A generated inequality family.
pub struct PcFamily(InequalityFamily);
/// The result of the polytope pipeline.
pub struct PcReport(PipelineReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Fail(PcStatus, String);

impl Fail {
    fn arg(msg: impl ToString) -> Self {
        Fail(PcStatus::InvalidArgument, msg.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PcStatus::Panic
        }
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail(PcStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Fail> {
    non_null(p, name)?;
    CStr::from_ptr(p).to_str().map_err(|_| Fail::arg(format!("{name} is not UTF-8")))
}

unsafe fn read_slice<'a, T>(p: *const T, len: usize, name: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    non_null(p, name)?;
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    non_null(out, "out")?;
    let c = CString::new(s).map_err(|_| Fail::arg("string contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    non_null(out, "out")?;
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn free_handle<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

fn partition(parts: &[u32]) -> Result<Partition, Fail> {
    Partition::new(parts.iter().map(|&x| x as usize).collect()).map_err(Fail::arg)
}

fn permutation(s: &str) -> Result<Permutation, Fail> {
    let t = s.trim();
    if t.starts_with('(') {
        Permutation::parse_cycles(t).map_err(Fail::arg)
    } else {
        Permutation::parse_one_line(t).map_err(Fail::arg)
    }
}

/// Message for the last failure on this thread, or null. Owned by the
/// library and valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn pc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Schubert polynomial of a permutation given as zero-based digits
/// (`"1032"`), one-based one-line (`"2,1,4,3"`) or cycles (`"(1 2)(3 4)"`).
#[no_mangle]
pub unsafe extern "C" fn pc_schubert(w: *const c_char, out: *mut *mut PcPoly) -> PcStatus {
    guard(|| {
        let w = permutation(read_str(w, "w")?)?;
        write_handle(out, PcPoly(schubert(&w)))
    })
}

/// Human-readable form in `x, y, z, …`.
#[no_mangle]
pub unsafe extern "C" fn pc_poly_to_string(poly: *const PcPoly, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        non_null(poly, "poly")?;
        write_string(out, (*poly).0.format_xyz())
    })
}

#[no_mangle]
pub unsafe extern "C" fn pc_poly_free(poly: *mut PcPoly) {
    free_handle(poly)
}

/// `c_w^v(a)` for the spectrum `a` (length `r`) and shape `nu`, written as a
/// decimal string.
#[no_mangle]
pub unsafe extern "C" fn pc_coefficient(
    a: *const i64,
    r: usize,
    nu: *const u32,
    nu_len: usize,
    v: *const c_char,
    w: *const c_char,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        let a = TestSpectrum::new(read_slice(a, r, "a")?.to_vec()).map_err(Fail::arg)?;
        let nu = partition(read_slice(nu, nu_len, "nu")?)?;
        let v = permutation(read_str(v, "v")?)?;
        let w = permutation(read_str(w, "w")?)?;
        let c = coefficient(&a, &nu, &v, &w).map_err(Fail::arg)?;
        write_string(out, c.to_string())
    })
}

/// Parse a state such as `"2[123]+√10[145]"` over `r` orbitals.
#[no_mangle]
pub unsafe extern "C" fn pc_state_parse(expr: *const c_char, r: usize, out: *mut *mut PcState) -> PcStatus {
    guard(|| {
        let psi = WedgeState::parse(read_str(expr, "expr")?, r).map_err(Fail::arg)?;
        write_handle(out, PcState(psi))
    })
}

/// Number of orbitals `r`.
#[no_mangle]
pub unsafe extern "C" fn pc_state_rank(state: *const PcState, out: *mut usize) -> PcStatus {
    guard(|| {
        non_null(state, "state")?;
        non_null(out, "out")?;
        *out = (*state).0.r();
        Ok(())
    })
}

/// Occupation numbers in non-increasing order, written to `buf[0..r]`.
#[no_mangle]
pub unsafe extern "C" fn pc_state_occupations(state: *const PcState, buf: *mut f64, len: usize) -> PcStatus {
    guard(|| {
        non_null(state, "state")?;
        let psi = &(*state).0;
        if len < psi.r() {
            return Err(Fail(PcStatus::BufferTooSmall, format!("need {} entries", psi.r())));
        }
        non_null(buf, "buf")?;
        let occ = occupation_numbers(psi).map_err(Fail::arg)?;
        std::slice::from_raw_parts_mut(buf, occ.values.len()).copy_from_slice(&occ.values);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn pc_state_free(state: *mut PcState) {
    free_handle(state)
}

fn family_result(r: Result<InequalityFamily, GeneratorError>) -> Result<InequalityFamily, Fail> {
    r.map_err(|e| match e {
        GeneratorError::ResourceCap { .. } => Fail(PcStatus::ResourceCap, e.to_string()),
        other => Fail::arg(other),
    })
}

/// First-kind family for `∧^N H_r`.
#[no_mangle]
pub unsafe extern "C" fn pc_grassmann_kind1(n: usize, r: usize, out: *mut *mut PcFamily) -> PcStatus {
    guard(|| write_handle(out, PcFamily(family_result(grassmann_kind1(n, r))?)))
}

/// Second-kind family at level `p`.
#[no_mangle]
pub unsafe extern "C" fn pc_grassmann_kind2(n: usize, p: usize, out: *mut *mut PcFamily) -> PcStatus {
    guard(|| write_handle(out, PcFamily(family_result(grassmann_kind2(n, p))?)))
}

#[no_mangle]
pub unsafe extern "C" fn pc_family_len(family: *const PcFamily, out: *mut usize) -> PcStatus {
    guard(|| {
        non_null(family, "family")?;
        non_null(out, "out")?;
        *out = (*family).0.items.len();
        Ok(())
    })
}

/// Item `index` as `Σ_{indices} λ_i ≤ bound`. `indices` receives up to
/// `cap` entries; `count` always receives the full length.
#[no_mangle]
pub unsafe extern "C" fn pc_family_item(
    family: *const PcFamily,
    index: usize,
    indices: *mut u32,
    cap: usize,
    count: *mut usize,
    bound: *mut i64,
) -> PcStatus {
    guard(|| {
        non_null(family, "family")?;
        non_null(count, "count")?;
        non_null(bound, "bound")?;
        let family = &*family;
        let item = family.0.items.get(index).ok_or_else(|| Fail::arg(format!("no item {index}")))?;
        *count = item.indices.len();
        *bound = item.bound;
        if cap < item.indices.len() {
            return Err(Fail(PcStatus::BufferTooSmall, format!("need {} entries", item.indices.len())));
        }
        non_null(indices, "indices")?;
        for (k, &i) in item.indices.iter().enumerate() {
            *indices.add(k) = i as u32;
        }
        Ok(())
    })
}

/// The whole family, including exclusions and certificates, as JSON.
#[no_mangle]
pub unsafe extern "C" fn pc_family_to_json(family: *const PcFamily, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        non_null(family, "family")?;
        let json = serde_json::to_string(&(*family).0).map_err(Fail::arg)?;
        write_string(out, json)
    })
}

#[no_mangle]
pub unsafe extern "C" fn pc_family_free(family: *mut PcFamily) {
    free_handle(family)
}

/// Run the moment-polytope pipeline for `(nu, r, rank_bound)` over the given
/// schedule of `|μ|` bounds.
#[no_mangle]
pub unsafe extern "C" fn pc_pipeline(
    nu: *const u32,
    nu_len: usize,
    r: usize,
    rank_bound: usize,
    schedule: *const u32,
    schedule_len: usize,
    out: *mut *mut PcReport,
) -> PcStatus {
    guard(|| {
        let nu = partition(read_slice(nu, nu_len, "nu")?)?;
        if nu.height() > r || rank_bound == 0 {
            return Err(Fail::arg("need height(nu) ≤ r and rank_bound ≥ 1"));
        }
        let schedule: Vec<usize> = read_slice(schedule, schedule_len, "schedule")?.iter().map(|&m| m as usize).collect();
        let report = pipeline(&System::new(nu, r, rank_bound), &schedule).map_err(|e| match e {
            PolytopeError::Plethysm(p) => Fail(PcStatus::ResourceCap, p.to_string()),
            other => Fail::arg(other),
        })?;
        write_handle(out, PcReport(report))
    })
}

/// `|μ|` at which the pipeline converged, or 0 if it did not.
#[no_mangle]
pub unsafe extern "C" fn pc_report_converged_at(report: *const PcReport, out: *mut usize) -> PcStatus {
    guard(|| {
        non_null(report, "report")?;
        non_null(out, "out")?;
        *out = (*report).0.converged_at.unwrap_or(0);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn pc_report_to_json(report: *const PcReport, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        non_null(report, "report")?;
        write_string(out, (*report).0.to_json().to_string())
    })
}

#[no_mangle]
pub unsafe extern "C" fn pc_report_free(report: *mut PcReport) {
    free_handle(report)
}
