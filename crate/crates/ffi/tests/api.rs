use std::ffi::{CStr, CString};
use std::ptr;

use h2unknot_ffi::*;

const NONE: H2uOptions = H2uOptions { gamma: -1, gamma_star: -1, known_band_count: -1, oracle: 0 };

fn last_error() -> String {
    unsafe { CStr::from_ptr(h2u_last_error()) }.to_str().unwrap().to_owned()
}

struct Summary {
    det: u64,
    theorem: H2uTheoremVerdict,
    lickorish: H2uLickorishVerdict,
    bounds: (i64, i64),
    json: String,
}

unsafe fn summarize(report: *mut H2uReport) -> Summary {
    let mut det = 0;
    assert_eq!(h2u_report_determinant(report, &mut det), H2uStatus::Ok);
    let mut theorem = H2uTheoremVerdict::Vacuous;
    assert_eq!(h2u_report_theorem_verdict(report, &mut theorem), H2uStatus::Ok);
    let mut lickorish = H2uLickorishVerdict::Obstructed;
    assert_eq!(h2u_report_lickorish_verdict(report, &mut lickorish), H2uStatus::Ok);
    let (mut lo, mut hi) = (0, 0);
    assert_eq!(h2u_report_bounds(report, &mut lo, &mut hi), H2uStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(h2u_report_to_json(report, &mut s), H2uStatus::Ok);
    let json = CStr::from_ptr(s).to_str().unwrap().to_owned();
    h2u_string_free(s);
    h2u_report_free(report);
    Summary { det, theorem, lickorish, bounds: (lo, hi), json }
}

#[test]
fn pretzel_13_4_11() {
    let opts = H2uOptions { gamma: 2, ..NONE };
    let mut r = ptr::null_mut();
    let s = unsafe {
        assert_eq!(h2u_analyze_pretzel(13, 4, 11, &opts, &mut r), H2uStatus::Ok);
        summarize(r)
    };
    assert_eq!(s.det, 239);
    assert_eq!(s.theorem, H2uTheoremVerdict::Obstructed);
    assert_eq!(s.lickorish, H2uLickorishVerdict::NotObstructed);
    assert_eq!(s.bounds, (2, 2));
    assert!(s.json.contains("\"11/2\""));
}

#[test]
fn matrix_and_unknot() {
    let fig8 = [2i64, -1, -1, 3];
    let mut r = ptr::null_mut();
    let s = unsafe {
        assert_eq!(h2u_analyze_matrix(fig8.as_ptr(), 2, ptr::null(), &mut r), H2uStatus::Ok);
        summarize(r)
    };
    assert_eq!((s.det, s.lickorish, s.bounds), (5, H2uLickorishVerdict::Obstructed, (2, -1)));

    let s = unsafe {
        assert_eq!(h2u_analyze_matrix(ptr::null(), 0, ptr::null(), &mut r), H2uStatus::Ok);
        summarize(r)
    };
    assert_eq!((s.det, s.theorem, s.bounds), (1, H2uTheoremVerdict::Vacuous, (0, -1)));
}

#[test]
fn pd_and_json_agree_with_pretzel() {
    let pd = CString::new("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
    let job = CString::new(r#"{"pretzel": [1, 1, 1]}"#).unwrap();
    let opts = H2uOptions { gamma: 1, ..NONE };
    let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
    let (sa, sb) = unsafe {
        assert_eq!(h2u_analyze_pd(pd.as_ptr(), -1, &opts, &mut a), H2uStatus::Ok);
        assert_eq!(h2u_analyze_json(job.as_ptr(), &opts, &mut b), H2uStatus::Ok);
        (summarize(a), summarize(b))
    };
    assert_eq!((sa.det, sa.theorem, sa.bounds), (3, H2uTheoremVerdict::NotObstructed, (1, 1)));
    assert_eq!((sb.det, sb.theorem, sb.bounds), (3, H2uTheoremVerdict::NotObstructed, (1, 1)));
}

#[test]
fn error_codes() {
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(h2u_analyze_pretzel(3, 2, 2, ptr::null(), &mut r), H2uStatus::InvalidInput);
        assert!(last_error().starts_with("NotAKnot"), "{}", last_error());
        assert!(r.is_null());

        let even = [2i64, 0, 0, 2];
        assert_eq!(h2u_analyze_matrix(even.as_ptr(), 2, ptr::null(), &mut r), H2uStatus::InvalidInput);
        assert!(last_error().starts_with("EvenDeterminant"), "{}", last_error());

        let asym = [3i64, 1, 0, 3];
        assert_eq!(h2u_analyze_matrix(asym.as_ptr(), 2, ptr::null(), &mut r), H2uStatus::InvalidInput);
        assert!(last_error().starts_with("NotSymmetric"), "{}", last_error());

        let bad = CString::new("X(1,2").unwrap();
        assert_eq!(h2u_analyze_pd(bad.as_ptr(), -1, ptr::null(), &mut r), H2uStatus::InvalidInput);
        assert!(last_error().starts_with("SyntaxError"), "{}", last_error());

        let job = CString::new(r#"{"unknot": true, "pretzel": [1,1,1]}"#).unwrap();
        assert_eq!(h2u_analyze_json(job.as_ptr(), ptr::null(), &mut r), H2uStatus::InvalidInput);

        let opts = H2uOptions { gamma: 1, ..NONE };
        assert_eq!(h2u_analyze_pretzel(13, 4, 11, &opts, &mut r), H2uStatus::InvalidInput);
        assert!(last_error().starts_with("InconsistentBounds"), "{}", last_error());

        assert_eq!(h2u_analyze_pd(ptr::null(), -1, ptr::null(), &mut r), H2uStatus::NullPointer);
        assert_eq!(h2u_analyze_pretzel(1, 1, 1, ptr::null(), ptr::null_mut()), H2uStatus::NullPointer);
        let mut det = 0;
        assert_eq!(h2u_report_determinant(ptr::null(), &mut det), H2uStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(h2u_analyze_pd(invalid.as_ptr().cast(), -1, ptr::null(), &mut r), H2uStatus::InvalidUtf8);

        h2u_report_free(ptr::null_mut());
        h2u_string_free(ptr::null_mut());
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(h2u_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
