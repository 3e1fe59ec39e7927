use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use pauli_constraints_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { pc_string_free(p) };
    s
}

fn last_error() -> String {
    let p = pc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn schubert_round_trip() {
    let w = CString::new("0321").unwrap();
    let mut poly = ptr::null_mut();
    assert_eq!(unsafe { pc_schubert(w.as_ptr(), &mut poly) }, PcStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { pc_poly_to_string(poly, &mut s) }, PcStatus::Ok);
    assert_eq!(take_string(s), "x^2y + x^2z + xy^2 + xyz + y^2z");
    unsafe { pc_poly_free(poly) };
}

#[test]
fn errors_are_reported() {
    let mut poly = ptr::null_mut();
    assert_eq!(unsafe { pc_schubert(ptr::null(), &mut poly) }, PcStatus::NullPointer);
    assert!(last_error().contains("null"));
    let bad = CString::new("1 1").unwrap();
    assert_eq!(unsafe { pc_schubert(bad.as_ptr(), &mut poly) }, PcStatus::InvalidArgument);
    assert!(poly.is_null());
    let mut fam = ptr::null_mut();
    assert_eq!(unsafe { pc_grassmann_kind2(3, 9, &mut fam) }, PcStatus::ResourceCap);
    assert!(fam.is_null());
}

#[test]
fn coefficient_is_one_on_table_row() {
    // λ1 + λ6 ≤ 1 on ∧³H₆
    let a = [1i64, 0, 0, 0, 0, -1];
    let nu = [1u32, 1, 1];
    let v = CString::new("()").unwrap();
    let w = CString::new("(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20)").unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { pc_coefficient(a.as_ptr(), a.len(), nu.as_ptr(), nu.len(), v.as_ptr(), w.as_ptr(), &mut out) };
    // this w is not minimal for the blocks, so the library must refuse it
    assert_eq!(status, PcStatus::InvalidArgument);
    let w = CString::new("()").unwrap();
    let status = unsafe { pc_coefficient(a.as_ptr(), a.len(), nu.as_ptr(), nu.len(), v.as_ptr(), w.as_ptr(), &mut out) };
    assert_eq!(status, PcStatus::Ok, "{}", last_error());
    assert_eq!(take_string(out), "1");
}

#[test]
fn state_occupations() {
    let expr = CString::new("[1,2,3]+[1,4,5]").unwrap();
    let mut state = ptr::null_mut();
    assert_eq!(unsafe { pc_state_parse(expr.as_ptr(), 6, &mut state) }, PcStatus::Ok);
    let mut r = 0;
    assert_eq!(unsafe { pc_state_rank(state, &mut r) }, PcStatus::Ok);
    assert_eq!(r, 6);
    let mut small = [0.0; 3];
    assert_eq!(unsafe { pc_state_occupations(state, small.as_mut_ptr(), small.len()) }, PcStatus::BufferTooSmall);
    let mut buf = [0.0; 6];
    assert_eq!(unsafe { pc_state_occupations(state, buf.as_mut_ptr(), buf.len()) }, PcStatus::Ok);
    assert_eq!(buf, [1.0, 0.5, 0.5, 0.5, 0.5, 0.0]);
    unsafe { pc_state_free(state) };
}

#[test]
fn family_items() {
    let mut fam = ptr::null_mut();
    assert_eq!(unsafe { pc_grassmann_kind2(3, 4, &mut fam) }, PcStatus::Ok);
    let mut len = 0;
    assert_eq!(unsafe { pc_family_len(fam, &mut len) }, PcStatus::Ok);
    assert_eq!(len, 4);
    let mut sets = Vec::new();
    for i in 0..len {
        let mut idx = [0u32; 8];
        let (mut count, mut bound) = (0, 0);
        assert_eq!(unsafe { pc_family_item(fam, i, idx.as_mut_ptr(), idx.len(), &mut count, &mut bound) }, PcStatus::Ok);
        assert_eq!(bound, 2);
        sets.push(idx[..count].to_vec());
    }
    sets.sort();
    assert_eq!(sets, vec![vec![1, 2, 4, 7], vec![1, 2, 5, 6], vec![1, 3, 4, 6], vec![2, 3, 4, 5]]);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { pc_family_to_json(fam, &mut json) }, PcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["N"], 3);
    unsafe { pc_family_free(fam) };
}

#[test]
fn pipeline_borland_dennis() {
    let nu = [1u32, 1, 1];
    let schedule = [1u32, 2, 3, 4];
    let mut report = ptr::null_mut();
    let status = unsafe { pc_pipeline(nu.as_ptr(), nu.len(), 6, 1, schedule.as_ptr(), schedule.len(), &mut report) };
    assert_eq!(status, PcStatus::Ok);
    let mut m = 0;
    assert_eq!(unsafe { pc_report_converged_at(report, &mut m) }, PcStatus::Ok);
    assert_eq!(m, 4);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { pc_report_to_json(report, &mut json) }, PcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["converged_at_M"], 4);
    unsafe { pc_report_free(report) };
}

#[test]
fn header_compiles_as_c() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/pauli_constraints.h");
    assert!(header.exists());
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["pc_schubert", "pc_coefficient", "pc_state_occupations", "pc_family_item", "pc_pipeline", "PC_STATUS_RESOURCE_CAP"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let src = std::env::temp_dir().join("pauli_constraints_header_check.c");
    std::fs::write(&src, "#include \"pauli_constraints.h\"\nint main(void) { PcPoly *p = 0; return pc_schubert(\"21\", &p) == PC_STATUS_OK ? 0 : 1; }\n").unwrap();
    match Command::new("cc").arg("-fsyntax-only").arg("-Wall").arg("-Werror").arg("-I").arg(header.parent().unwrap()).arg(&src).output() {
        Ok(out) => assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr)),
        Err(e) => eprintln!("no C compiler available ({e}); syntax check skipped"),
    }
}
